//! Domination bookkeeping shared by the constructive stages, and the
//! isolate and leaf reductions.

use crate::graph::{Graph, Vertex};
use crate::solution::Solution;

/// Per-run domination state: which vertices are dominated and which are in D.
///
/// Invariant: `dominated[v]` iff some `u ∈ N[v]` is in the solution.
#[derive(Clone, Debug)]
pub struct CoverState {
    dominated: Vec<bool>,
    undominated: usize,
    solution: Solution,
}

impl CoverState {
    pub fn new(g: &Graph) -> Self {
        Self {
            dominated: vec![false; g.n()],
            undominated: g.n(),
            solution: Solution::new(g.n()),
        }
    }

    /// Rebuilds the state for an existing solution, keeping its insertion order.
    pub fn from_solution(g: &Graph, solution: Solution) -> Self {
        assert_eq!(solution.universe(), g.n(), "solution built for a different graph");
        let mut dominated = vec![false; g.n()];
        for &d in solution.members() {
            for x in g.closed_neighborhood(d) {
                dominated[x as usize] = true;
            }
        }
        let undominated = dominated.iter().filter(|&&d| !d).count();
        Self {
            dominated,
            undominated,
            solution,
        }
    }

    #[inline]
    pub fn is_dominated(&self, v: Vertex) -> bool {
        self.dominated[v as usize]
    }

    #[inline]
    pub fn in_d(&self, v: Vertex) -> bool {
        self.solution.contains(v)
    }

    pub fn undominated_count(&self) -> usize {
        self.undominated
    }

    pub fn solution(&self) -> &Solution {
        &self.solution
    }

    pub fn into_solution(self) -> Solution {
        self.solution
    }

    /// Smallest undominated vertex at or after `from`.
    pub(crate) fn first_undominated_from(&self, from: usize) -> Option<Vertex> {
        self.dominated[from..]
            .iter()
            .position(|&d| !d)
            .map(|i| (from + i) as Vertex)
    }

    /// Puts `v` into D and marks N[v] dominated. No-op if `v` is already in D.
    ///
    /// Returns `true` if `v` was added.
    pub fn add_to_d(&mut self, g: &Graph, v: Vertex) -> bool {
        if !self.solution.insert(v) {
            return false;
        }
        for x in g.closed_neighborhood(v) {
            let slot = &mut self.dominated[x as usize];
            if !*slot {
                *slot = true;
                self.undominated -= 1;
            }
        }
        true
    }
}

/// Adds every degree-0 vertex to D. Returns the number of vertices added.
pub fn apply_isolate_rule(state: &mut CoverState, g: &Graph) -> usize {
    g.vertices()
        .filter(|&v| g.degree(v) == 0)
        .filter(|&v| state.add_to_d(g, v))
        .count()
}

/// For each degree-1 vertex, in ascending id order, that is still undominated
/// when examined, adds its unique neighbor to D. Degrees are those of the
/// input graph; the rule is not iterated to a fixpoint.
pub fn apply_leaf_rule(state: &mut CoverState, g: &Graph) -> usize {
    let mut added = 0;
    for u in g.vertices().filter(|&u| g.degree(u) == 1) {
        if state.is_dominated(u) {
            continue;
        }
        let support = g.neighbors(u)[0];
        if state.add_to_d(g, support) {
            added += 1;
        }
    }
    added
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: u32) -> Graph {
        Graph::from_edges(leaves as usize + 1, (1..=leaves).map(|l| (0, l)))
    }

    fn path(n: u32) -> Graph {
        Graph::from_edges(n as usize, (1..n).map(|v| (v - 1, v)))
    }

    fn assert_consistent(state: &CoverState, g: &Graph) {
        let fresh = CoverState::from_solution(g, state.solution().clone());
        for v in g.vertices() {
            assert_eq!(state.is_dominated(v), fresh.is_dominated(v), "vertex {v}");
        }
        assert_eq!(state.undominated_count(), fresh.undominated_count());
    }

    #[test]
    fn add_star_center() {
        let g = star(3);
        let mut s = CoverState::new(&g);
        assert!(s.add_to_d(&g, 0));
        assert_eq!(s.undominated_count(), 0);
        assert_eq!(s.solution().len(), 1);
        assert!(!s.add_to_d(&g, 0));
        assert_eq!(s.solution().len(), 1);
        assert_consistent(&s, &g);
    }

    #[test]
    fn add_isolated() {
        let g = Graph::from_edges(3, [(1, 2)]);
        let mut s = CoverState::new(&g);
        s.add_to_d(&g, 0);
        assert!(s.is_dominated(0));
        assert!(!s.is_dominated(1));
        assert_eq!(s.undominated_count(), 2);
    }

    #[test]
    fn isolates() {
        let g = Graph::from_edges(4, []);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_isolate_rule(&mut s, &g), 4);
        assert_eq!(s.undominated_count(), 0);

        let g = path(4);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_isolate_rule(&mut s, &g), 0);

        let g = Graph::from_edges(3, [(1, 2)]);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_isolate_rule(&mut s, &g), 1);
        assert!(s.in_d(0));
    }

    #[test]
    fn leaves_force_support() {
        let g = path(3);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_leaf_rule(&mut s, &g), 1);
        assert_eq!(s.solution().members(), &[1]);
        assert_eq!(s.undominated_count(), 0);

        let g = star(5);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_leaf_rule(&mut s, &g), 1);
        assert_eq!(s.solution().members(), &[0]);

        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let mut s = CoverState::new(&c4);
        assert_eq!(apply_leaf_rule(&mut s, &c4), 0);
    }

    #[test]
    fn isolated_edge_takes_first_leafs_neighbor() {
        let g = Graph::from_edges(2, [(0, 1)]);
        let mut s = CoverState::new(&g);
        assert_eq!(apply_leaf_rule(&mut s, &g), 1);
        assert_eq!(s.solution().members(), &[1]);
    }

    #[test]
    fn from_solution_matches_incremental() {
        let g = path(6);
        let mut s = CoverState::new(&g);
        s.add_to_d(&g, 4);
        s.add_to_d(&g, 0);
        assert_consistent(&s, &g);
        assert_eq!(s.first_undominated_from(0), Some(2));
        assert_eq!(s.first_undominated_from(3), None);
    }
}
