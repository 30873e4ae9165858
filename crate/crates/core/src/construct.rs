//! Lazy gain-based greedy construction.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, Vertex};
use crate::reduce::CoverState;
use crate::solution::Solution;

/// Max-queue of `(gain bound, vertex)` entries.
///
/// Keys are ordered `(gain, Reverse(v))` so equal gains pop the smaller id first.
/// Every key is an upper bound on the vertex's current gain, since gains only
/// shrink as domination spreads.
#[derive(Debug, Default)]
pub struct GainQueue {
    heap: BinaryHeap<(usize, Reverse<Vertex>)>,
}

impl GainQueue {
    /// Seeds the queue with `deg(v) + 1` for every vertex not yet in D.
    pub fn with_degree_bounds(g: &Graph, state: &CoverState) -> Self {
        let heap = g
            .vertices()
            .filter(|&v| !state.in_d(v))
            .map(|v| (g.degree(v) + 1, Reverse(v)))
            .collect();
        Self { heap }
    }

    pub fn push(&mut self, gain: usize, v: Vertex) {
        self.heap.push((gain, Reverse(v)));
    }

    pub fn pop(&mut self) -> Option<(usize, Vertex)> {
        self.heap.pop().map(|(gain, Reverse(v))| (gain, v))
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }
}

/// Number of undominated vertices in N[v].
#[inline]
pub fn true_gain(state: &CoverState, g: &Graph, v: Vertex) -> usize {
    g.closed_neighborhood(v)
        .filter(|&x| !state.is_dominated(x))
        .count()
}

/// Extends D until every vertex is dominated, always taking a vertex of
/// maximum current gain (smallest id on ties). Returns the number of vertices added.
pub fn lazy_greedy(state: &mut CoverState, g: &Graph) -> usize {
    let before = state.solution().len();
    if state.undominated_count() == 0 {
        return 0;
    }
    let mut queue = GainQueue::with_degree_bounds(g, state);
    let mut fallback_cursor = 0;

    while state.undominated_count() > 0 {
        let Some((key, v)) = queue.pop() else {
            // Unreachable while every positive-gain vertex keeps an entry,
            // kept so construction always terminates with a dominating set.
            let w = state
                .first_undominated_from(fallback_cursor)
                .expect("undominated count is positive");
            fallback_cursor = w as usize;
            state.add_to_d(g, w);
            continue;
        };
        if state.in_d(v) {
            continue;
        }
        let gain = true_gain(state, g, v);
        if gain == 0 {
            continue;
        }
        if gain < key {
            queue.push(gain, v);
            continue;
        }
        state.add_to_d(g, v);
    }
    state.solution().len() - before
}

/// The plain greedy baseline: no reductions, no pruning.
pub fn greedy_ln(g: &Graph) -> Solution {
    let mut state = CoverState::new(g);
    lazy_greedy(&mut state, g);
    state.into_solution()
}
