//! Immutable simple undirected graphs on densely labelled vertices `0..n`.

use std::fmt;

use crate::error::GraphError;

/// A simple undirected graph. Vertices are `0..n`; neighbor lists are kept
/// sorted so that iteration order, and everything derived from it, is stable.
///
/// Equality is label-exact: two isomorphic graphs with different labelings
/// compare unequal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph {
            adjacency,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1]) && !list.contains(&u)
        }));
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True if no two vertices of `set` are adjacent.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.vertex_count() && set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    /// True if every pair in `edges` is an edge and no two pairs share an endpoint.
    pub fn is_matching(&self, edges: &[(usize, usize)]) -> bool {
        let mut used = vec![false; self.vertex_count()];
        for &(u, v) in edges {
            if !self.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    /// Same vertex set; `u`-`v` adjacent exactly when they are distinct and not
    /// adjacent here.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adjacency = (0..n)
            .map(|u| {
                let mut present = self.adjacency[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while present.next_if(|&&w| w < v).is_some() {}
                        v != u && present.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }

    /// The line graph together with the map from its vertices back to edges
    /// of `self`. Line-graph vertex `i` is the `i`-th edge in lexicographic order.
    pub fn line_graph(&self) -> (Graph, EdgeIndexMap) {
        let map = EdgeIndexMap::new(self);
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count()];
        for (i, &(u, v)) in map.edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let adjacency = map
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut list: Vec<usize> = incident[u]
                    .iter()
                    .chain(&incident[v])
                    .copied()
                    .filter(|&j| j != i)
                    .collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        (Graph::from_sorted_adjacency(adjacency), map)
    }

    /// `self` on labels `0..n_self`, `other` shifted up by `n_self`, and every
    /// edge between the two copies.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        let mut adjacency = Vec::with_capacity(a + b);
        for list in &self.adjacency {
            let mut row = list.clone();
            row.extend(a..a + b);
            adjacency.push(row);
        }
        for list in &other.adjacency {
            let mut row: Vec<usize> = (0..a).collect();
            row.extend(list.iter().map(|&v| v + a));
            adjacency.push(row);
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    /// `self` on labels `0..n_self` beside `other` shifted up by `n_self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let a = self.vertex_count();
        let adjacency = self
            .adjacency
            .iter()
            .cloned()
            .chain(
                other
                    .adjacency
                    .iter()
                    .map(|list| list.iter().map(|&v| v + a).collect()),
            )
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Maps line-graph vertices back to the source edges they stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndexMap {
    edges: Vec<(usize, usize)>,
}

impl EdgeIndexMap {
    pub fn new(g: &Graph) -> Self {
        EdgeIndexMap {
            edges: g.edges().collect(),
        }
    }

    pub fn edge(&self, line_vertex: usize) -> (usize, usize) {
        self.edges[line_vertex]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}
