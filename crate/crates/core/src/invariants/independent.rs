//! Maximum independent sets: an exhaustive search for small graphs and a
//! branch-and-bound solver for everything else.

use super::bitset::VertexSet;
use super::MaxIndependentSet;
use crate::error::SolverError;
use crate::graph::Graph;

/// Vertex-count guard for [`alpha_bruteforce`].
pub const BRUTEFORCE_MAX_VERTICES: usize = 25;

/// Exhaustive search over independent subsets, visited in lexicographic
/// order (include-before-exclude on vertex `0, 1, ...`). The witness is the
/// lexicographically smallest maximum independent set.
pub fn alpha_bruteforce(g: &Graph) -> Result<MaxIndependentSet, SolverError> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(SolverError::Guard {
            solver: "alpha_bruteforce",
            what: "vertex count",
            actual: n,
            limit: BRUTEFORCE_MAX_VERTICES,
        });
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |mask, &u| mask | 1 << u))
        .collect();

    fn search(adjacency: &[u32], allowed: u32, chosen: u32, best: &mut u32) {
        let size = chosen.count_ones();
        // Only strictly larger sets replace the incumbent, so the first
        // optimum reached (the lexicographically smallest) is kept.
        if size + allowed.count_ones() <= best.count_ones() {
            return;
        }
        if allowed == 0 {
            if size > best.count_ones() {
                *best = chosen;
            }
            return;
        }
        let v = allowed.trailing_zeros();
        let bit = 1u32 << v;
        search(adjacency, allowed & !bit & !adjacency[v as usize], chosen | bit, best);
        search(adjacency, allowed & !bit, chosen, best);
    }

    let mut best = 0u32;
    search(&adjacency, (1u32 << n) - 1, 0, &mut best);
    let witness: Vec<usize> = (0..n).filter(|&v| best >> v & 1 == 1).collect();
    Ok(MaxIndependentSet {
        size: witness.len(),
        witness,
    })
}

/// Exact maximum independent set by branch and bound.
///
/// Vertices of degree at most one in the remaining graph are taken greedily.
/// Otherwise the solver branches on a maximum-degree vertex (smallest label on
/// ties), first including it and deleting its closed neighborhood, then
/// excluding it. A greedy clique cover of the remaining vertices bounds how
/// many more can be added.
pub fn alpha_exact(g: &Graph) -> MaxIndependentSet {
    let n = g.vertex_count();
    let adjacency: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut set = VertexSet::new(n);
            for &u in g.neighbors(v) {
                set.insert(u);
            }
            set
        })
        .collect();
    let mut solver = BranchAndBound {
        adjacency,
        current: Vec::new(),
        best: Vec::new(),
    };
    solver.best = solver.greedy(VertexSet::full(n));
    solver.search(VertexSet::full(n));

    let mut witness = solver.best;
    witness.sort_unstable();
    MaxIndependentSet {
        size: witness.len(),
        witness,
    }
}

struct BranchAndBound {
    adjacency: Vec<VertexSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl BranchAndBound {
    fn degree_in(&self, v: usize, remaining: &VertexSet) -> usize {
        self.adjacency[v].intersection_len(remaining)
    }

    fn remove_closed_neighborhood(&self, v: usize, remaining: &mut VertexSet) {
        remaining.difference_with(&self.adjacency[v]);
        remaining.remove(v);
    }

    /// Minimum-degree greedy, used only to seed the incumbent.
    fn greedy(&self, mut remaining: VertexSet) -> Vec<usize> {
        let mut chosen = Vec::new();
        loop {
            let lowest = remaining
                .iter()
                .min_by_key(|&v| (self.degree_in(v, &remaining), v));
            let Some(v) = lowest else { break };
            chosen.push(v);
            self.remove_closed_neighborhood(v, &mut remaining);
        }
        chosen
    }

    /// Number of cliques in a first-fit clique cover of `remaining`.
    fn clique_cover_bound(&self, remaining: &VertexSet) -> usize {
        let mut common: Vec<VertexSet> = Vec::new();
        for v in remaining.iter() {
            match common.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(&self.adjacency[v]),
                None => common.push(self.adjacency[v].clone()),
            }
        }
        common.len()
    }

    fn search(&mut self, mut remaining: VertexSet) {
        let mark = self.current.len();
        loop {
            let low = remaining
                .iter()
                .find(|&v| self.degree_in(v, &remaining) <= 1);
            let Some(v) = low else { break };
            self.current.push(v);
            self.remove_closed_neighborhood(v, &mut remaining);
        }

        if remaining.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + self.clique_cover_bound(&remaining) > self.best.len() {
            let pivot = remaining
                .iter()
                .map(|v| (self.degree_in(v, &remaining), v))
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                .map(|(_, v)| v)
                .expect("remaining is non-empty");

            let mut with = remaining.clone();
            self.remove_closed_neighborhood(pivot, &mut with);
            self.current.push(pivot);
            self.search(with);
            self.current.pop();

            remaining.remove(pivot);
            self.search(remaining);
        }
        self.current.truncate(mark);
    }
}
