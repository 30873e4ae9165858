//! Cover counts and backward pruning of redundant dominators.

use crate::graph::{Graph, Vertex};
use crate::solution::Solution;

/// For each vertex, the number of members of D whose closed neighborhood contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCounts {
    counts: Vec<u32>,
}

impl CoverCounts {
    pub fn zeros(n: usize) -> Self {
        Self { counts: vec![0; n] }
    }

    #[inline]
    pub fn get(&self, x: Vertex) -> u32 {
        self.counts[x as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.counts
    }

    /// Accounts for `d` joining D.
    #[inline]
    pub fn add(&mut self, g: &Graph, d: Vertex) {
        for x in g.closed_neighborhood(d) {
            self.counts[x as usize] += 1;
        }
    }

    /// Accounts for `d` leaving D.
    #[inline]
    pub fn remove(&mut self, g: &Graph, d: Vertex) {
        for x in g.closed_neighborhood(d) {
            debug_assert!(self.counts[x as usize] > 0);
            self.counts[x as usize] -= 1;
        }
    }

    /// `true` iff every vertex of N[d] is covered at least twice, so that
    /// dropping `d` from D keeps domination.
    #[inline]
    pub fn is_redundant(&self, g: &Graph, d: Vertex) -> bool {
        g.closed_neighborhood(d).all(|x| self.counts[x as usize] >= 2)
    }

    pub fn all_covered(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }
}

/// Counts, for each vertex, the dominators covering it (itself included).
pub fn compute_cover_counts(g: &Graph, s: &Solution) -> CoverCounts {
    let mut counts = CoverCounts::zeros(g.n());
    for &d in s.members() {
        counts.add(g, d);
    }
    counts
}

/// One newest-first pass over D with live counts: every member whose closed
/// neighborhood is covered at least twice is dropped. Survivors keep their
/// relative insertion order. Returns the number of removed members.
pub fn backward_prune(g: &Graph, s: &mut Solution, counts: &mut CoverCounts) -> usize {
    let mut removed = vec![false; g.n()];
    let mut n_removed = 0;
    for &v in s.members().iter().rev() {
        if counts.is_redundant(g, v) {
            counts.remove(g, v);
            removed[v as usize] = true;
            n_removed += 1;
        }
    }
    if n_removed > 0 {
        s.retain(|v| !removed[v as usize]);
    }
    n_removed
}

/// Backward prune restricted to `t` and the members within distance two of it.
///
/// When no member was redundant before `t` joined D, these are the only
/// members that can have become redundant, so the result equals a full
/// [`backward_prune`] pass.
pub fn prune_around(g: &Graph, s: &mut Solution, counts: &mut CoverCounts, t: Vertex) -> usize {
    let mut near: Vec<Vertex> = Vec::new();
    for x in g.closed_neighborhood(t) {
        for d in g.closed_neighborhood(x) {
            if s.contains(d) {
                near.push(d);
            }
        }
    }
    if near.is_empty() {
        return 0;
    }
    near.sort_unstable();
    near.dedup();
    let mut removed = Vec::new();
    for &v in s.members().iter().rev() {
        if near.binary_search(&v).is_ok() && counts.is_redundant(g, v) {
            counts.remove(g, v);
            removed.push(v);
        }
    }
    if !removed.is_empty() {
        removed.sort_unstable();
        s.retain(|v| removed.binary_search(&v).is_err());
    }
    removed.len()
}
