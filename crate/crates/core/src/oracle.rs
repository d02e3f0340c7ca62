//! Reference searches used to cross-check the solvers in `invariants`.
//!
//! Nothing here shares code with the production solvers: each function is a
//! direct search over the definition of the quantity it computes.

use crate::error::SolverError;
use crate::graph::Graph;

pub const MATCHING_EXHAUSTIVE_MAX_EDGES: usize = 24;
pub const SUBSET_SEARCH_MAX_VERTICES: usize = 20;

fn guard(solver: &'static str, what: &'static str, actual: usize, limit: usize) -> Result<(), SolverError> {
    if actual > limit {
        return Err(SolverError::Guard {
            solver,
            what,
            actual,
            limit,
        });
    }
    Ok(())
}

/// Largest set of pairwise vertex-disjoint edges, by trying every edge subset
/// that is a matching.
pub fn matching_exhaustive(g: &Graph) -> Result<usize, SolverError> {
    guard(
        "matching_exhaustive",
        "edge count",
        g.edge_count(),
        MATCHING_EXHAUSTIVE_MAX_EDGES,
    )?;
    let edges: Vec<(usize, usize)> = g.edges().collect();

    fn extend(edges: &[(usize, usize)], used: &mut [bool], size: usize) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return size;
        };
        let mut best = extend(rest, used, size);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            best = best.max(extend(rest, used, size + 1));
            used[u] = false;
            used[v] = false;
        }
        best
    }
    Ok(extend(&edges, &mut vec![false; g.vertex_count()], 0))
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| mask >> v & 1 == 1)
}

/// Smallest vertex set touching every edge, over all `2^n` subsets.
pub fn min_vertex_cover_bruteforce(g: &Graph) -> Result<usize, SolverError> {
    let n = g.vertex_count();
    guard("min_vertex_cover_bruteforce", "vertex count", n, SUBSET_SEARCH_MAX_VERTICES)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Ok(subsets(n)
        .filter(|&mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// Largest set of pairwise adjacent vertices, over all `2^n` subsets.
pub fn clique_number_bruteforce(g: &Graph) -> Result<usize, SolverError> {
    let n = g.vertex_count();
    guard("clique_number_bruteforce", "vertex count", n, SUBSET_SEARCH_MAX_VERTICES)?;
    Ok(subsets(n)
        .filter(|&mask| {
            members(mask).all(|u| members(mask).all(|v| u == v || g.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Minimum vertex cover by direct search on covers, usable beyond the subset
/// guard on the sparse family instances and their dense complements.
///
/// A vertex whose only remaining neighbor is `u` forces `u` into the cover.
/// Otherwise a maximum-degree vertex `v` either joins the cover or all of its
/// remaining neighbors do. A greedy maximal matching of what is left bounds
/// the number of further cover vertices from below.
pub fn vertex_cover_search(g: &Graph) -> usize {
    struct Search<'g> {
        g: &'g Graph,
        removed: Vec<bool>,
        best: usize,
    }

    impl Search<'_> {
        fn live_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
            self.g.neighbors(v).iter().copied().filter(|&u| !self.removed[u])
        }

        fn matching_lower_bound(&self) -> usize {
            let mut used = self.removed.clone();
            let mut size = 0;
            for (u, v) in self.g.edges() {
                if !used[u] && !used[v] {
                    used[u] = true;
                    used[v] = true;
                    size += 1;
                }
            }
            size
        }

        fn take(&mut self, taken: &mut Vec<usize>, v: usize) {
            if !self.removed[v] {
                self.removed[v] = true;
                taken.push(v);
            }
        }

        fn run(&mut self, size: usize) {
            let mut taken = Vec::new();
            let n = self.g.vertex_count();
            while let Some(u) = (0..n)
                .filter(|&v| !self.removed[v])
                .find_map(|v| {
                    let mut it = self.live_neighbors(v);
                    match (it.next(), it.next()) {
                        (Some(u), None) => Some(u),
                        _ => None,
                    }
                })
            {
                self.take(&mut taken, u);
            }
            let size = size + taken.len();

            let pivot = (0..n)
                .filter(|&v| !self.removed[v])
                .map(|v| (self.live_neighbors(v).count(), v))
                .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
            match pivot {
                None | Some((0, _)) => self.best = self.best.min(size),
                Some((_, v)) => {
                    if size + self.matching_lower_bound() < self.best {
                        self.removed[v] = true;
                        self.run(size + 1);
                        self.removed[v] = false;

                        let neighbors: Vec<usize> = self.live_neighbors(v).collect();
                        for &u in &neighbors {
                            self.removed[u] = true;
                        }
                        self.run(size + neighbors.len());
                        for &u in &neighbors {
                            self.removed[u] = false;
                        }
                    }
                }
            }
            for v in taken {
                self.removed[v] = false;
            }
        }
    }

    let mut search = Search {
        g,
        removed: vec![false; g.vertex_count()],
        best: g.vertex_count(),
    };
    search.run(0);
    search.best
}
