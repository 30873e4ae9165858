//! Simulated annealing over feasible dominating sets.
//!
//! Three moves, drawn 40:40:20:
//! - removal of a random member, accepted whenever the rest still dominates;
//! - exchange of a random member `d` for a random neighbor `t ∉ D`, accepted
//!   whenever `t` covers everything only `d` covered;
//! - addition of a random non-member, accepted with probability `exp(-1/T)`.
//!
//! Every visited state dominates the graph; the smallest one seen is returned.

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::budget::{Clock, Deadline};
use crate::graph::{Graph, Vertex};
use crate::prune::{compute_cover_counts, CoverCounts};
use crate::solution::Solution;
use crate::verify::{verify, VerifyError};

pub const TEMPERATURE_FLOOR: f64 = 1e-6;
pub const DEFAULT_MAX_EPOCHS: u64 = 1000;

const REMOVAL_WEIGHT: u32 = 40;
const EXCHANGE_WEIGHT: u32 = 40;
const ADDITION_WEIGHT: u32 = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnnealError {
    #[error("seed solution leaves vertex {} undominated", .0 + 1)]
    InvalidSeed(Vertex),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("invalid annealing schedule: {0}")]
    Schedule(&'static str),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnnealConfig {
    pub initial_temperature: f64,
    /// Geometric decay applied after every epoch, in `(0, 1)`.
    pub cooling_factor: f64,
    /// Proposals per epoch; `None` means `max(100, n)`.
    pub moves_per_epoch: Option<usize>,
    pub seed: u64,
    /// Wall-clock limit; `None` disables the clock.
    pub time_budget: Option<Duration>,
    /// Epoch limit; `None` runs until the clock stops it.
    pub max_epochs: Option<u64>,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        Self {
            initial_temperature: 1.0,
            cooling_factor: 0.995,
            moves_per_epoch: None,
            seed: 0,
            time_budget: None,
            max_epochs: Some(DEFAULT_MAX_EPOCHS),
        }
    }
}

impl AnnealConfig {
    pub fn validate(&self) -> Result<(), AnnealError> {
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return Err(AnnealError::Schedule("initial temperature must be positive"));
        }
        if !(self.cooling_factor > 0.0 && self.cooling_factor < 1.0) {
            return Err(AnnealError::Schedule("cooling factor must lie in (0, 1)"));
        }
        if self.moves_per_epoch == Some(0) {
            return Err(AnnealError::Schedule("moves per epoch must be positive"));
        }
        if self.time_budget.is_none() && self.max_epochs.is_none() {
            return Err(AnnealError::Schedule("need a time budget or an epoch limit"));
        }
        Ok(())
    }

    pub fn moves_for(&self, n: usize) -> usize {
        self.moves_per_epoch.unwrap_or(n.max(100))
    }
}

/// Temperature after one epoch, clamped at [`TEMPERATURE_FLOOR`].
pub fn decay(temperature: f64, cfg: &AnnealConfig) -> f64 {
    (temperature * cfg.cooling_factor).max(TEMPERATURE_FLOOR)
}

const ABSENT: u32 = u32::MAX;

struct Annealer<'g> {
    g: &'g Graph,
    counts: CoverCounts,
    members: Vec<Vertex>,
    pos: Vec<u32>,
    rng: ChaCha8Rng,
}

impl<'g> Annealer<'g> {
    fn new(g: &'g Graph, seed_solution: &Solution, seed: u64) -> Self {
        let mut pos = vec![ABSENT; g.n()];
        for (i, &v) in seed_solution.members().iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        Self {
            g,
            counts: compute_cover_counts(g, seed_solution),
            members: seed_solution.members().to_vec(),
            pos,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    #[inline]
    fn in_d(&self, v: Vertex) -> bool {
        self.pos[v as usize] != ABSENT
    }

    fn insert(&mut self, v: Vertex) {
        self.pos[v as usize] = self.members.len() as u32;
        self.members.push(v);
        self.counts.add(self.g, v);
    }

    fn delete(&mut self, v: Vertex) {
        let i = self.pos[v as usize] as usize;
        self.members.swap_remove(i);
        if let Some(&moved) = self.members.get(i) {
            self.pos[moved as usize] = i as u32;
        }
        self.pos[v as usize] = ABSENT;
        self.counts.remove(self.g, v);
    }

    fn random_member(&mut self) -> Vertex {
        self.members[self.rng.gen_range(0..self.members.len())]
    }

    /// `t` covers every vertex whose only dominator is `d`.
    fn can_exchange(&self, d: Vertex, t: Vertex) -> bool {
        self.g
            .closed_neighborhood(d)
            .filter(|&x| self.counts.get(x) == 1)
            .all(|x| self.g.closed_contains(t, x))
    }

    /// One proposal; returns `true` if the set shrank.
    fn step(&mut self, temperature: f64) -> bool {
        let roll = self
            .rng
            .gen_range(0..REMOVAL_WEIGHT + EXCHANGE_WEIGHT + ADDITION_WEIGHT);
        if roll < REMOVAL_WEIGHT {
            let d = self.random_member();
            if self.counts.is_redundant(self.g, d) {
                self.delete(d);
                return true;
            }
        } else if roll < REMOVAL_WEIGHT + EXCHANGE_WEIGHT {
            let d = self.random_member();
            let nbrs = self.g.neighbors(d);
            let outside = nbrs.iter().filter(|&&x| !self.in_d(x)).count();
            if outside == 0 {
                return false;
            }
            let k = self.rng.gen_range(0..outside);
            let t = nbrs.iter().copied().filter(|&x| !self.in_d(x)).nth(k).unwrap();
            if self.can_exchange(d, t) {
                self.delete(d);
                self.insert(t);
            }
        } else {
            let t = self.rng.gen_range(0..self.g.n()) as Vertex;
            let accept = (-1.0 / temperature).exp();
            if !self.in_d(t) && self.rng.gen::<f64>() < accept {
                self.insert(t);
            }
        }
        false
    }
}

/// Anneals from `seed_solution` with the wall-clock budget from `cfg`.
pub fn sa_solve(g: &Graph, seed_solution: &Solution, cfg: &AnnealConfig) -> Result<Solution, AnnealError> {
    let deadline = Deadline::none().min_after(cfg.time_budget);
    sa_solve_until(g, seed_solution, cfg, &deadline)
}

/// [`sa_solve`] against an explicit deadline (`cfg.time_budget` is ignored).
pub fn sa_solve_until(
    g: &Graph,
    seed_solution: &Solution,
    cfg: &AnnealConfig,
    deadline: &Deadline,
) -> Result<Solution, AnnealError> {
    cfg.validate()?;
    let report = verify(g, seed_solution)?;
    if let Some(x) = report.first_uncovered {
        return Err(AnnealError::InvalidSeed(x));
    }
    if g.n() == 0 {
        return Ok(seed_solution.clone());
    }

    let mut state = Annealer::new(g, seed_solution, cfg.seed);
    let mut best: Option<Vec<Vertex>> = None;
    let mut best_len = seed_solution.len();
    let moves = cfg.moves_for(g.n());
    let mut temperature = cfg.initial_temperature;
    let mut clock = Clock::new(deadline);
    let mut epoch = 0u64;

    'epochs: while cfg.max_epochs.map_or(true, |cap| epoch < cap) {
        if clock.check() {
            break;
        }
        for _ in 0..moves {
            if clock.tick() {
                break 'epochs;
            }
            if state.step(temperature) && state.members.len() < best_len {
                best_len = state.members.len();
                best = Some(state.members.clone());
            }
        }
        debug_assert!(state.counts.all_covered());
        temperature = decay(temperature, cfg);
        epoch += 1;
    }

    Ok(match best {
        Some(members) => Solution::from_members(g.n(), members).expect("annealer keeps a set"),
        None => seed_solution.clone(),
    })
}
