//! Independence number, vertex cover number and matching number.

mod bitset;
mod independent;
mod matching;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::graph::Graph;

pub use independent::{alpha_bruteforce, alpha_exact, BRUTEFORCE_MAX_VERTICES};
pub use matching::matching_number;

/// Edge-count guard for [`matching_via_line_graph`].
pub const LINE_GRAPH_MAX_EDGES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxIndependentSet {
    pub size: usize,
    /// Sorted vertex labels.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxMatching {
    pub size: usize,
    /// Sorted `(u, v)` pairs with `u < v`.
    pub witness: Vec<(usize, usize)>,
}

/// Minimum vertex cover size, through `beta = n - alpha`.
pub fn beta(g: &Graph) -> usize {
    g.vertex_count() - alpha_exact(g).size
}

/// Matching number computed as the independence number of the line graph.
pub fn matching_via_line_graph(g: &Graph) -> Result<usize, SolverError> {
    if g.edge_count() > LINE_GRAPH_MAX_EDGES {
        return Err(SolverError::Guard {
            solver: "matching_via_line_graph",
            what: "edge count",
            actual: g.edge_count(),
            limit: LINE_GRAPH_MAX_EDGES,
        });
    }
    let (line, _) = g.line_graph();
    Ok(alpha_exact(&line).size)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    n.is_multiple_of(2) && matching_number(g).size == n / 2
}

/// α, β and ν of a graph and of its complement, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub beta: usize,
    pub nu: usize,
    pub alpha_witness: Vec<usize>,
    pub nu_witness: Vec<[usize; 2]>,
    pub m_c: usize,
    pub alpha_c: usize,
    pub beta_c: usize,
    pub nu_c: usize,
    pub alpha_witness_c: Vec<usize>,
    pub nu_witness_c: Vec<[usize; 2]>,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        let complement = g.complement();
        let n = g.vertex_count();
        let (a, a_c) = (alpha_exact(g), alpha_exact(&complement));
        let (nu, nu_c) = (matching_number(g), matching_number(&complement));
        let pairs = |m: MaxMatching| m.witness.into_iter().map(|(u, v)| [u, v]).collect();
        InvariantReport {
            n,
            m: g.edge_count(),
            alpha: a.size,
            beta: n - a.size,
            nu: nu.size,
            alpha_witness: a.witness,
            nu_witness: pairs(nu),
            m_c: complement.edge_count(),
            alpha_c: a_c.size,
            beta_c: n - a_c.size,
            nu_c: nu_c.size,
            alpha_witness_c: a_c.witness,
            nu_witness_c: pairs(nu_c),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let set = |v: &[usize]| {
            let items: Vec<String> = v.iter().map(usize::to_string).collect();
            format!("{{{}}}", items.join(", "))
        };
        let pairs = |v: &[[usize; 2]]| {
            let items: Vec<String> = v.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            format!("{{{}}}", items.join(", "))
        };
        let mut out = String::new();
        writeln!(out, "| quantity | G | complement |").unwrap();
        writeln!(out, "|---|---|---|").unwrap();
        writeln!(out, "| vertices | {} | {} |", self.n, self.n).unwrap();
        writeln!(out, "| edges | {} | {} |", self.m, self.m_c).unwrap();
        writeln!(out, "| alpha | {} | {} |", self.alpha, self.alpha_c).unwrap();
        writeln!(out, "| beta | {} | {} |", self.beta, self.beta_c).unwrap();
        writeln!(out, "| nu | {} | {} |", self.nu, self.nu_c).unwrap();
        writeln!(
            out,
            "| alpha witness | {} | {} |",
            set(&self.alpha_witness),
            set(&self.alpha_witness_c)
        )
        .unwrap();
        writeln!(
            out,
            "| nu witness | {} | {} |",
            pairs(&self.nu_witness),
            pairs(&self.nu_witness_c)
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&Graph::complete(5)), 4);
        assert_eq!(beta(&Graph::empty(4)), 0);
        assert_eq!(beta(&families::helm(3).unwrap()), 3);
    }

    #[test]
    fn line_graph_route_examples() {
        assert_eq!(matching_via_line_graph(&families::cycle(6).unwrap()), Ok(3));
        assert_eq!(matching_via_line_graph(&Graph::complete(3)), Ok(1));
        assert_eq!(matching_via_line_graph(&families::sunlet(4).unwrap()), Ok(4));
        assert_eq!(matching_via_line_graph(&Graph::empty(3)), Ok(0));
    }

    #[test]
    fn line_graph_route_guard() {
        // K12 has 66 edges.
        let err = matching_via_line_graph(&Graph::complete(12)).unwrap_err();
        assert!(matches!(err, SolverError::Guard { actual: 66, limit: 64, .. }));
        assert!(matching_via_line_graph(&families::sunlet(32).unwrap()).is_ok());
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&Graph::complete(2)));
        assert!(!has_perfect_matching(&Graph::complete(3)));
        for n in 3..=5 {
            assert!(has_perfect_matching(&families::sunlet(n).unwrap()));
        }
        assert!(has_perfect_matching(&Graph::empty(0)));
        assert!(!has_perfect_matching(&Graph::empty(2)));
    }

    #[test]
    fn report_for_complete_graph() {
        let r = InvariantReport::compute(&Graph::complete(5));
        assert_eq!((r.n, r.m, r.alpha, r.beta, r.nu), (5, 10, 1, 4, 2));
        assert_eq!((r.m_c, r.alpha_c, r.beta_c, r.nu_c), (0, 5, 0, 0));
        assert_eq!(r.alpha_witness_c, vec![0, 1, 2, 3, 4]);
        let json = r.to_json();
        assert!(json.contains("\"alpha\": 1"));
        assert!(json.contains("\"beta_c\": 0"));
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.to_markdown().contains("| beta | 4 | 0 |"));
    }
}
