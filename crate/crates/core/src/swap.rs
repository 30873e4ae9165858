//! Budgeted 1-swap local improvement and the final safety patch.
//!
//! A dominator `w` can be traded for a non-member `t` whenever `N[t]` contains
//! every vertex that only `w` covers. When `w` covers nothing uniquely it is
//! simply dropped.

use std::time::Duration;

use thiserror::Error;

use crate::budget::{Clock, Deadline};
use crate::construct::lazy_greedy;
use crate::graph::{Graph, Vertex};
use crate::prune::{compute_cover_counts, prune_around, CoverCounts};
use crate::reduce::CoverState;
use crate::solution::Solution;

pub const DEFAULT_ATTEMPT_CAP: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetError {
    #[error("attempt cap must be positive")]
    ZeroAttempts,
    #[error("time budget must be positive")]
    ZeroTime,
}

/// Limits for the swap phase: a number of sweeps over D and an optional
/// wall-clock budget (`None` disables the clock).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwapBudget {
    attempt_cap: u32,
    time_budget: Option<Duration>,
}

impl SwapBudget {
    pub fn new(attempt_cap: u32, time_budget: Option<Duration>) -> Result<Self, BudgetError> {
        if attempt_cap == 0 {
            return Err(BudgetError::ZeroAttempts);
        }
        if time_budget == Some(Duration::ZERO) {
            return Err(BudgetError::ZeroTime);
        }
        Ok(Self {
            attempt_cap,
            time_budget,
        })
    }

    pub fn attempt_cap(&self) -> u32 {
        self.attempt_cap
    }

    pub fn time_budget(&self) -> Option<Duration> {
        self.time_budget
    }
}

impl Default for SwapBudget {
    fn default() -> Self {
        Self {
            attempt_cap: DEFAULT_ATTEMPT_CAP,
            time_budget: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapOutcome {
    /// `w` covered nothing uniquely and was dropped.
    Removed,
    /// `w` was replaced by the given vertex.
    Swapped(Vertex),
    NoSwap,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SwapStats {
    pub sweeps: u32,
    pub swaps: usize,
    pub removals: usize,
    pub pruned: usize,
    pub timed_out: bool,
}

/// Vertices of N[w] whose only dominator is `w`.
pub fn uniquely_covered(g: &Graph, counts: &CoverCounts, w: Vertex) -> Vec<Vertex> {
    g.closed_neighborhood(w)
        .filter(|&x| counts.get(x) == 1)
        .collect()
}

/// Attempts to drop or replace `w ∈ D`. Candidates are `N(w) \ D` in
/// adjacency order; the first one covering every uniquely covered vertex wins.
pub fn try_one_swap(
    g: &Graph,
    s: &mut Solution,
    counts: &mut CoverCounts,
    w: Vertex,
) -> SwapOutcome {
    let unbounded = Deadline::none();
    let mut clock = Clock::new(&unbounded);
    let mut unique = Vec::new();
    try_swap_with(g, s, counts, w, &mut unique, &mut clock).unwrap_or(SwapOutcome::NoSwap)
}

/// `None` means the clock ran out before a decision; the state is untouched then.
fn try_swap_with(
    g: &Graph,
    s: &mut Solution,
    counts: &mut CoverCounts,
    w: Vertex,
    unique: &mut Vec<Vertex>,
    clock: &mut Clock<'_>,
) -> Option<SwapOutcome> {
    debug_assert!(s.contains(w));
    unique.clear();
    unique.extend(g.closed_neighborhood(w).filter(|&x| counts.get(x) == 1));

    if unique.is_empty() {
        s.remove(w);
        counts.remove(g, w);
        return Some(SwapOutcome::Removed);
    }

    for &t in g.neighbors(w) {
        if clock.tick() {
            return None;
        }
        if s.contains(t) {
            continue;
        }
        if unique.iter().all(|&x| g.closed_contains(t, x)) {
            s.remove(w);
            counts.remove(g, w);
            s.insert(t);
            counts.add(g, t);
            return Some(SwapOutcome::Swapped(t));
        }
    }
    Some(SwapOutcome::NoSwap)
}

/// Runs up to `budget.attempt_cap()` sweeps of [`try_one_swap`] over D in
/// insertion order. Every exchange is followed by a backward prune, which
/// only needs to look near the incoming vertex because no member was
/// redundant before it. Stops early once a sweep changes nothing.
pub fn swap_phase(
    g: &Graph,
    s: &mut Solution,
    counts: &mut CoverCounts,
    budget: &SwapBudget,
) -> SwapStats {
    let deadline = Deadline::none().min_after(budget.time_budget);
    swap_phase_until(g, s, counts, budget.attempt_cap, &deadline)
}

/// [`swap_phase`] against an explicit deadline.
pub fn swap_phase_until(
    g: &Graph,
    s: &mut Solution,
    counts: &mut CoverCounts,
    attempt_cap: u32,
    deadline: &Deadline,
) -> SwapStats {
    let mut stats = SwapStats::default();
    let mut clock = Clock::new(deadline);
    let mut unique = Vec::new();
    let mut order = Vec::new();

    for _ in 0..attempt_cap {
        if clock.check() {
            stats.timed_out = true;
            break;
        }
        let before = (stats.swaps, stats.removals);
        order.clear();
        order.extend_from_slice(s.members());
        for &w in &order {
            if !s.contains(w) {
                continue;
            }
            match try_swap_with(g, s, counts, w, &mut unique, &mut clock) {
                None => {
                    stats.timed_out = true;
                    break;
                }
                Some(SwapOutcome::Removed) => stats.removals += 1,
                Some(SwapOutcome::Swapped(t)) => {
                    stats.swaps += 1;
                    stats.pruned += prune_around(g, s, counts, t);
                }
                Some(SwapOutcome::NoSwap) => {}
            }
        }
        stats.sweeps += 1;
        debug_assert_eq!(*counts, compute_cover_counts(g, s));
        if stats.timed_out || (stats.swaps, stats.removals) == before {
            break;
        }
    }
    stats
}

/// Recomputes domination from scratch and, while anything is undominated,
/// adds the vertex that covers the most undominated vertices (smallest id on
/// ties). Returns the number of vertices added.
pub fn safety_patch(g: &Graph, s: &mut Solution) -> usize {
    let mut state = CoverState::from_solution(g, std::mem::replace(s, Solution::new(0)));
    let added = if state.undominated_count() > 0 {
        lazy_greedy(&mut state, g)
    } else {
        0
    };
    *s = state.into_solution();
    added
}
