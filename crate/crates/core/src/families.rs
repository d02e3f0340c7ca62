//! Generators for the named graph families.
//!
//! Labeling conventions are fixed so that witness sets are stable:
//! hubs come first (vertex 0), then the cycle or path, then pendant or
//! outer vertices in the order of the vertex they hang from.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    CompleteBipartite,
    Wheel,
    Fan,
    Helm,
    CompleteSun,
    Sunlet,
    ArmedCrown,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Wheel,
        Family::Fan,
        Family::Helm,
        Family::CompleteSun,
        Family::Sunlet,
        Family::ArmedCrown,
    ];

    /// Name used in family-spec text.
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "bipartite",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
            Family::Helm => "helm",
            Family::CompleteSun => "complete_sun",
            Family::Sunlet => "sunlet",
            Family::ArmedCrown => "armed_crown",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "complete_bipartite" => Some(Family::CompleteBipartite),
            "sun" => Some(Family::CompleteSun),
            _ => Family::ALL.into_iter().find(|f| f.name() == name),
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::ArmedCrown => 2,
            _ => 1,
        }
    }

    /// Smallest admissible value of each parameter.
    pub fn minimums(self) -> &'static [usize] {
        match self {
            Family::Complete | Family::Empty | Family::Path => &[1],
            Family::Fan => &[2],
            Family::Cycle | Family::Wheel | Family::Helm | Family::CompleteSun | Family::Sunlet => &[3],
            Family::CompleteBipartite => &[1, 1],
            Family::ArmedCrown => &[2, 3],
        }
    }

    /// Parameter names, in order, as used by claim formulas.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self.arity() {
            2 => &["m", "n"],
            _ => &["n"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with parameters inside its domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    family: Family,
    params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self, FamilyError> {
        if params.len() != family.arity() {
            return Err(FamilyError::Arity {
                family: family.name(),
                expected: family.arity(),
                got: params.len(),
            });
        }
        for ((&p, &min), name) in params
            .iter()
            .zip(family.minimums())
            .zip(family.parameter_names())
        {
            if p < min {
                return Err(FamilyError::OutOfDomain {
                    family: family.name(),
                    message: format!("{name} = {p} is below the minimum {min}"),
                });
            }
        }
        Ok(FamilySpec { family, params })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn build(&self) -> Graph {
        let p = &self.params;
        match self.family {
            Family::Complete => Graph::complete(p[0]),
            Family::Empty => Graph::empty(p[0]),
            Family::Path => path_graph(p[0]),
            Family::Cycle => cycle_graph(p[0]),
            Family::CompleteBipartite => bipartite_graph(p[0], p[1]),
            Family::Wheel => Graph::complete(1).join(&cycle_graph(p[0])),
            Family::Fan => Graph::complete(1).join(&path_graph(p[0])),
            Family::Helm => helm_graph(p[0]),
            Family::CompleteSun => complete_sun_graph(p[0]),
            Family::Sunlet => sunlet_graph(p[0]),
            Family::ArmedCrown => armed_crown_graph(p[0], p[1]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `name:p1[,p2]`, e.g. `wheel:4` or `armed_crown:3,4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || FamilyError::Syntax(s.to_string());
        let (name, rest) = s.trim().split_once(':').ok_or_else(syntax)?;
        let family =
            Family::from_name(name).ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
        let params = rest
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| syntax()))
            .collect::<Result<Vec<_>, _>>()?;
        FamilySpec::new(family, params)
    }
}

fn checked(family: Family, params: &[usize]) -> Result<Graph, FamilyError> {
    FamilySpec::new(family, params.to_vec()).map(|spec| spec.build())
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Complete, &[n])
}

pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Empty, &[n])
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Path, &[n])
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Cycle, &[n])
}

/// Part A is `0..m`, part B is `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    checked(Family::CompleteBipartite, &[m, n])
}

/// `K1 + Cn`: hub 0, rim `1..=n`.
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Wheel, &[n])
}

/// `K1 + Pn`: hub 0, path `1..=n`.
pub fn fan(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Fan, &[n])
}

/// Wheel on rim `1..=n` with pendant `n + i` hanging from rim vertex `i`.
pub fn helm(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Helm, &[n])
}

/// Clique `w_i = i` for `i < n`; outer `u_i = n + i` adjacent to `w_i` and `w_{i+1 mod n}`.
pub fn complete_sun(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::CompleteSun, &[n])
}

/// Cycle `0..n` with pendant `n + i` on cycle vertex `i`.
pub fn sunlet(n: usize) -> Result<Graph, FamilyError> {
    checked(Family::Sunlet, &[n])
}

/// Cycle `0..n`; cycle vertex `i` is the first vertex of a path on `m`
/// vertices continuing through `n + i(m-1) + k` for `k < m-1`. The graph has
/// `mn` vertices.
pub fn armed_crown(m: usize, n: usize) -> Result<Graph, FamilyError> {
    checked(Family::ArmedCrown, &[m, n])
}

fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

fn bipartite_graph(m: usize, n: usize) -> Graph {
    let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)));
    Graph::from_edges(m + n, edges).expect("bipartite edges are valid")
}

fn helm_graph(n: usize) -> Graph {
    let wheel = Graph::complete(1).join(&cycle_graph(n));
    let edges = wheel.edges().chain((1..=n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n + 1, edges).expect("helm edges are valid")
}

fn complete_sun_graph(n: usize) -> Graph {
    let clique = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    let outer = (0..n).flat_map(|i| [(i, n + i), ((i + 1) % n, n + i)]);
    Graph::from_edges(2 * n, clique.chain(outer)).expect("sun edges are valid")
}

fn sunlet_graph(n: usize) -> Graph {
    let pendants = (0..n).map(|i| (i, n + i));
    Graph::from_edges(2 * n, (0..n).map(|i| (i, (i + 1) % n)).chain(pendants))
        .expect("sunlet edges are valid")
}

fn armed_crown_graph(m: usize, n: usize) -> Graph {
    let arm = m - 1;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let mut prev = i;
        for k in 0..arm {
            let next = n + i * arm + k;
            edges.push((prev, next));
            prev = next;
        }
    }
    Graph::from_edges(m * n, edges).expect("armed crown edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(g: &Graph) -> (usize, usize) {
        (g.vertex_count(), g.edge_count())
    }

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(cycle(3).unwrap(), Graph::complete(3));
        let p4 = path(4).unwrap();
        assert_eq!(counts(&p4), (4, 3));
        assert_eq!(p4.degrees().iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(counts(&complete_bipartite(2, 3).unwrap()), (5, 6));
        assert!(complete_bipartite(2, 3).unwrap().has_edge(1, 4));
        assert!(!complete_bipartite(2, 3).unwrap().has_edge(2, 3));
    }

    #[test]
    fn wheel_examples() {
        assert_eq!(wheel(3).unwrap(), Graph::complete(4));
        assert_eq!(counts(&wheel(4).unwrap()), (5, 8));
        let w = wheel(5).unwrap();
        assert_eq!(w.degree(0), 5);
        assert!((1..=5).all(|v| w.degree(v) == 3));
    }

    #[test]
    fn fan_examples() {
        assert_eq!(fan(2).unwrap(), Graph::complete(3));
        assert_eq!(counts(&fan(4).unwrap()), (5, 7));
        // The hub and the middle of the path both reach degree 3.
        let f3 = fan(3).unwrap();
        assert_eq!(f3.degrees(), vec![3, 2, 3, 2]);
    }

    #[test]
    fn helm_examples() {
        assert_eq!(counts(&helm(3).unwrap()), (7, 9));
        let h4 = helm(4).unwrap();
        assert_eq!(h4.degree(0), 4);
        assert!((1..=4).all(|v| h4.degree(v) == 4));
        assert!((5..=8).all(|v| h4.degree(v) == 1));
        assert_eq!(counts(&helm(5).unwrap()), (11, 15));
    }

    #[test]
    fn complete_sun_examples() {
        assert_eq!(counts(&complete_sun(3).unwrap()), (6, 9));
        let s4 = complete_sun(4).unwrap();
        assert!((4..8).all(|v| s4.degree(v) == 2));
        assert!((0..4).all(|v| s4.degree(v) == 5));
        assert_eq!(counts(&complete_sun(5).unwrap()), (10, 20));
        // u_{n-1} wraps around to w_0.
        assert!(s4.has_edge(7, 3) && s4.has_edge(7, 0));
    }

    #[test]
    fn sunlet_examples() {
        assert_eq!(counts(&sunlet(3).unwrap()), (6, 6));
        assert_eq!(sorted_degrees(&sunlet(4).unwrap()), vec![1, 1, 1, 1, 3, 3, 3, 3]);
        for n in 3..=5 {
            assert_eq!(sunlet(n).unwrap(), armed_crown(2, n).unwrap());
        }
    }

    #[test]
    fn armed_crown_examples() {
        assert_eq!(counts(&armed_crown(2, 3).unwrap()), (6, 6));
        let g = armed_crown(3, 4).unwrap();
        assert_eq!(counts(&g), (12, 12));
        // Arm of cycle vertex 1 is 1 - 6 - 7.
        assert!(g.has_edge(1, 6) && g.has_edge(6, 7));
        assert_eq!(g.degree(7), 1);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(cycle(2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(wheel(2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(fan(1), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(helm(2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(complete_sun(2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(sunlet(2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(armed_crown(1, 4), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(armed_crown(2, 2), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(complete(0), Err(FamilyError::OutOfDomain { .. })));
        assert!(matches!(complete_bipartite(0, 3), Err(FamilyError::OutOfDomain { .. })));
    }

    #[test]
    fn spec_text_parsing() {
        let spec: FamilySpec = "armed_crown:3,4".parse().unwrap();
        assert_eq!(spec.family(), Family::ArmedCrown);
        assert_eq!(spec.params(), &[3, 4]);
        assert_eq!(spec.to_string(), "armed_crown:3,4");
        assert_eq!("bipartite:2,3".parse::<FamilySpec>().unwrap().to_string(), "bipartite:2,3");
        assert_eq!(
            "complete_bipartite:2,3".parse::<FamilySpec>().unwrap().family(),
            Family::CompleteBipartite
        );
        assert_eq!("complete:5".parse::<FamilySpec>().unwrap().build(), Graph::complete(5));

        assert!(matches!("wheel".parse::<FamilySpec>(), Err(FamilyError::Syntax(_))));
        assert!(matches!("wheel:x".parse::<FamilySpec>(), Err(FamilyError::Syntax(_))));
        assert!(matches!("gear:4".parse::<FamilySpec>(), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!("wheel:4,5".parse::<FamilySpec>(), Err(FamilyError::Arity { .. })));
        assert!(matches!("wheel:2".parse::<FamilySpec>(), Err(FamilyError::OutOfDomain { .. })));
    }
}
