//! End-to-end solvers and algorithm selection.
//!
//! `hedom5` runs, in order: isolate and leaf reductions, lazy greedy,
//! backward pruning, the budgeted 1-swap phase and the safety patch.
//! Only the swap phase is time-limited; it gets the global budget minus a
//! 5% reserve and whatever the earlier stages used.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::anneal::{sa_solve_until, AnnealConfig};
use crate::budget::Deadline;
use crate::construct::{greedy_ln, lazy_greedy};
use crate::graph::Graph;
use crate::prune::{backward_prune, compute_cover_counts};
use crate::reduce::{apply_isolate_rule, apply_leaf_rule, CoverState};
use crate::solution::Solution;
use crate::swap::{safety_patch, swap_phase_until, DEFAULT_ATTEMPT_CAP};
use crate::verify::verify;

/// Fraction of the global budget held back for writing the answer.
pub const OUTPUT_RESERVE: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Hedom5,
    Greedy,
    Sa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Greedy, Algorithm::Sa, Algorithm::Hedom5];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Hedom5 => "hedom5",
            Algorithm::Greedy => "greedy",
            Algorithm::Sa => "sa",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected hedom5, greedy or sa)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hedom5" => Ok(Algorithm::Hedom5),
            "greedy" | "greedy-ln" => Ok(Algorithm::Greedy),
            "sa" => Ok(Algorithm::Sa),
            other => Err(UnknownAlgorithm(other.to_owned())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    /// Global wall-clock budget; `None` makes every run attempt-bounded.
    pub time_budget: Option<Duration>,
    /// Sweeps for the swap phase.
    pub attempt_cap: u32,
    pub seed: u64,
    /// Run the isolate and leaf rules before greedy (hedom5 only).
    pub reductions: bool,
    /// Schedule for `sa`; its `seed` is replaced by [`SolverConfig::seed`].
    pub anneal: AnnealConfig,
    /// Raised from outside to stop the time-limited phases early.
    pub stop: Option<Arc<AtomicBool>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::Hedom5,
            time_budget: None,
            attempt_cap: DEFAULT_ATTEMPT_CAP,
            seed: 0,
            reductions: true,
            anneal: AnnealConfig::default(),
            stop: None,
        }
    }
}

impl SolverConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        Self {
            algorithm,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Reduce,
    Greedy,
    Prune,
    Swap,
    Anneal,
    Patch,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Reduce => "reduce",
            Stage::Greedy => "greedy",
            Stage::Prune => "prune",
            Stage::Swap => "swap",
            Stage::Anneal => "anneal",
            Stage::Patch => "patch",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StageRecord {
    pub stage: Stage,
    /// |D| when the stage finished.
    pub size: usize,
    /// Vertices added (or, for prune and swap, removed) by the stage.
    pub changed: usize,
    pub elapsed: Duration,
}

/// Sizes and timings after each stage of one run.
#[derive(Clone, Debug, PartialEq)]
pub struct Trace {
    pub algorithm: Algorithm,
    pub stages: Vec<StageRecord>,
}

impl Trace {
    pub fn size_after(&self, stage: Stage) -> Option<usize> {
        self.stages.iter().find(|r| r.stage == stage).map(|r| r.size)
    }

    pub fn patch_added(&self) -> usize {
        self.stages
            .iter()
            .find(|r| r.stage == Stage::Patch)
            .map_or(0, |r| r.changed)
    }
}

/// One line per stage: `trace algo=<a> stage=<s> size=<k> changed=<c> ms=<t>`.
impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.stages {
            writeln!(
                f,
                "trace algo={} stage={} size={} changed={} ms={:.3}",
                self.algorithm,
                r.stage.name(),
                r.size,
                r.changed,
                r.elapsed.as_secs_f64() * 1e3
            )?;
        }
        Ok(())
    }
}

struct Recorder {
    start: Instant,
    trace: Trace,
}

impl Recorder {
    fn record(&mut self, stage: Stage, size: usize, changed: usize) {
        self.trace.stages.push(StageRecord {
            stage,
            size,
            changed,
            elapsed: self.start.elapsed(),
        });
    }
}

/// Runs the configured algorithm; the result always dominates `g`.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Solution {
    solve_traced(g, cfg).0
}

/// [`solve`] plus the per-stage trace. Elapsed times are cumulative from the call.
pub fn solve_traced(g: &Graph, cfg: &SolverConfig) -> (Solution, Trace) {
    let start = Instant::now();
    let mut rec = Recorder {
        start,
        trace: Trace {
            algorithm: cfg.algorithm,
            stages: Vec::new(),
        },
    };
    let deadline = Deadline::at(cfg.time_budget.map(|b| start + b.mul_f64(1.0 - OUTPUT_RESERVE)))
        .with_stop_flag(cfg.stop.clone());

    let mut solution = match cfg.algorithm {
        Algorithm::Greedy => {
            let s = greedy_ln(g);
            rec.record(Stage::Greedy, s.len(), s.len());
            s
        }
        Algorithm::Sa => {
            let seed = greedy_ln(g);
            rec.record(Stage::Greedy, seed.len(), seed.len());
            let anneal = AnnealConfig {
                seed: cfg.seed,
                ..cfg.anneal.clone()
            };
            let annealing_deadline = deadline.min_after(anneal.time_budget);
            let s = sa_solve_until(g, &seed, &anneal, &annealing_deadline)
                .expect("greedy seed is feasible and the schedule was validated");
            rec.record(Stage::Anneal, s.len(), seed.len() - s.len());
            s
        }
        Algorithm::Hedom5 => hedom5(g, cfg, &deadline, &mut rec),
    };

    let added = safety_patch(g, &mut solution);
    rec.record(Stage::Patch, solution.len(), added);

    let report = verify(g, &solution).expect("solution built over this graph");
    assert!(
        report.valid,
        "internal error: {} produced an invalid set",
        cfg.algorithm
    );
    (solution, rec.trace)
}

fn hedom5(g: &Graph, cfg: &SolverConfig, deadline: &Deadline, rec: &mut Recorder) -> Solution {
    let mut state = CoverState::new(g);
    if cfg.reductions {
        let forced = apply_isolate_rule(&mut state, g) + apply_leaf_rule(&mut state, g);
        rec.record(Stage::Reduce, state.solution().len(), forced);
    }

    let added = lazy_greedy(&mut state, g);
    rec.record(Stage::Greedy, state.solution().len(), added);

    let mut solution = state.into_solution();
    let mut counts = compute_cover_counts(g, &solution);
    let pruned = backward_prune(g, &mut solution, &mut counts);
    rec.record(Stage::Prune, solution.len(), pruned);

    let before = solution.len();
    if cfg.attempt_cap > 0 {
        swap_phase_until(g, &mut solution, &mut counts, cfg.attempt_cap, deadline);
    }
    rec.record(Stage::Swap, solution.len(), before - solution.len());
    solution
}
