use ng_core::families::{self, Family, FamilySpec};
use ng_core::formats::{decode_graph6, encode_graph6};
use ng_core::invariants::{
    alpha_bruteforce, alpha_exact, beta, has_perfect_matching, matching_number,
    matching_via_line_graph, LINE_GRAPH_MAX_EDGES,
};
use ng_core::oracle::{
    clique_number_bruteforce, matching_exhaustive, min_vertex_cover_bruteforce,
};
use ng_core::Graph;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn gnp(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Every family instance with first parameter up to `max_n` and second up to `max_m`.
fn family_instances(max_n: usize, max_m: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let mins = family.minimums();
        if family.arity() == 1 {
            out.extend((mins[0]..=max_n).map(|n| FamilySpec::new(family, vec![n]).unwrap()));
        } else {
            for m in mins[0]..=max_m {
                out.extend((mins[1]..=max_n).map(|n| FamilySpec::new(family, vec![m, n]).unwrap()));
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(14)) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        let n = g.vertex_count();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn join_and_union_sizes(g in arb_graph(8), h in arb_graph(8)) {
        let j = g.join(&h);
        prop_assert_eq!(j.vertex_count(), g.vertex_count() + h.vertex_count());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count());
        let u = g.disjoint_union(&h);
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        // The join is the complement of the union of complements.
        prop_assert_eq!(j, g.complement().disjoint_union(&h.complement()).complement());
    }

    #[test]
    fn line_graph_size_law(g in arb_graph(12)) {
        let (l, map) = g.line_graph();
        prop_assert_eq!(l.vertex_count(), g.edge_count());
        let expected: usize = g.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.edge_count(), expected);
        prop_assert!(map.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn solvers_agree_with_oracles(g in arb_graph(14)) {
        let exact = alpha_exact(&g);
        let brute = alpha_bruteforce(&g).unwrap();
        prop_assert_eq!(exact.size, brute.size);
        prop_assert!(g.is_independent_set(&exact.witness));
        prop_assert_eq!(exact.witness.len(), exact.size);
        prop_assert_eq!(beta(&g), min_vertex_cover_bruteforce(&g).unwrap());

        let m = matching_number(&g);
        prop_assert!(g.is_matching(&m.witness));
        prop_assert!(m.size <= g.vertex_count() / 2);
        prop_assert_eq!(m.size == g.vertex_count() / 2 && g.vertex_count() % 2 == 0, has_perfect_matching(&g));
        if g.edge_count() <= LINE_GRAPH_MAX_EDGES {
            prop_assert_eq!(matching_via_line_graph(&g).unwrap(), m.size);
        }
    }
}

#[test]
fn graph6_round_trips_random_graphs() {
    let mut rng = StdRng::seed_from_u64(6);
    for n in 1..=32 {
        for _ in 0..200 {
            let p = rng.gen_range(0.0..=1.0);
            let g = gnp(&mut rng, n, p);
            let text = encode_graph6(&g).unwrap();
            assert_eq!(decode_graph6(&text).unwrap(), g, "n = {n}, text = {text}");
        }
    }
}

#[test]
fn alpha_exact_matches_bruteforce_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(500);
    let mut count = 0;
    for n in 4..=18 {
        for step in 1..=9 {
            let p = step as f64 / 10.0;
            for _ in 0..4 {
                let g = gnp(&mut rng, n, p);
                let exact = alpha_exact(&g);
                assert_eq!(exact.size, alpha_bruteforce(&g).unwrap().size, "{g:?}");
                assert!(g.is_independent_set(&exact.witness));
                count += 1;
            }
        }
    }
    assert!(count >= 500);
}

#[test]
fn clique_duality() {
    let mut rng = StdRng::seed_from_u64(16);
    for n in 1..=16 {
        for step in [2, 5, 8] {
            let g = gnp(&mut rng, n, step as f64 / 10.0);
            assert_eq!(alpha_exact(&g.complement()).size, clique_number_bruteforce(&g).unwrap());
        }
    }
    for spec in family_instances(16, 5) {
        let g = spec.build();
        if g.vertex_count() <= 16 {
            assert_eq!(alpha_exact(&g.complement()).size, clique_number_bruteforce(&g).unwrap(), "{spec}");
        }
    }
}

#[test]
fn gallai_against_bruteforce_cover() {
    let mut rng = StdRng::seed_from_u64(14);
    for n in 0..=14 {
        for step in 1..=9 {
            let g = gnp(&mut rng, n, step as f64 / 10.0);
            let cover = min_vertex_cover_bruteforce(&g).unwrap();
            assert_eq!(alpha_exact(&g).size + cover, n);
            assert_eq!(beta(&g), cover);
        }
    }
}

#[test]
fn matching_against_exhaustive_search() {
    let mut rng = StdRng::seed_from_u64(16);
    for n in 0..=12 {
        for step in 1..=9 {
            let g = gnp(&mut rng, n, step as f64 / 10.0);
            if g.edge_count() <= 16 {
                assert_eq!(matching_number(&g).size, matching_exhaustive(&g).unwrap(), "{g:?}");
            }
        }
    }
}

#[test]
fn family_instances_agree_with_oracles() {
    for spec in family_instances(20, 5) {
        let g = spec.build();
        for h in [g.clone(), g.complement()] {
            let exact = alpha_exact(&h);
            assert!(h.is_independent_set(&exact.witness), "{spec}");
            if h.vertex_count() <= 20 {
                assert_eq!(exact.size, alpha_bruteforce(&h).unwrap().size, "{spec}");
            }
            assert_eq!(exact.size + beta(&h), h.vertex_count());
            let m = matching_number(&h);
            assert!(h.is_matching(&m.witness));
            assert!(m.size <= h.vertex_count() / 2);
            if h.edge_count() <= LINE_GRAPH_MAX_EDGES {
                assert_eq!(matching_via_line_graph(&h).unwrap(), m.size, "{spec}");
            }
            if h.edge_count() <= 16 {
                assert_eq!(m.size, matching_exhaustive(&h).unwrap(), "{spec}");
            }
        }
    }
}

#[test]
fn family_closed_forms() {
    for spec in family_instances(12, 5) {
        let g = spec.build();
        let p = spec.params();
        let (v, e) = match spec.family() {
            Family::Complete => (p[0], p[0] * (p[0] - 1) / 2),
            Family::Empty => (p[0], 0),
            Family::Path => (p[0], p[0] - 1),
            Family::Cycle => (p[0], p[0]),
            Family::CompleteBipartite => (p[0] + p[1], p[0] * p[1]),
            Family::Wheel => (p[0] + 1, 2 * p[0]),
            Family::Fan => (p[0] + 1, 2 * p[0] - 1),
            Family::Helm => (2 * p[0] + 1, 3 * p[0]),
            Family::CompleteSun => (2 * p[0], p[0] * (p[0] - 1) / 2 + 2 * p[0]),
            Family::Sunlet => (2 * p[0], 2 * p[0]),
            Family::ArmedCrown => (p[0] * p[1], p[0] * p[1]),
        };
        assert_eq!((g.vertex_count(), g.edge_count()), (v, e), "{spec}");
        assert_eq!(spec.build(), g, "{spec} is not deterministic");
        if spec.family() != Family::Empty && g.vertex_count() > 1 {
            assert!(g.degrees().iter().all(|&d| d > 0), "{spec} has an isolated vertex");
        }
        let (l, _) = g.line_graph();
        let expected: usize = g.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum();
        assert_eq!((l.vertex_count(), l.edge_count()), (e, expected), "{spec}");
    }
}

#[test]
fn armed_crown_with_two_vertex_arms_is_the_sunlet() {
    for n in 3..=12 {
        assert_eq!(families::armed_crown(2, n).unwrap(), families::sunlet(n).unwrap());
    }
}
