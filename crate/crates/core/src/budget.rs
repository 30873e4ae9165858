//! Wall-clock deadlines with an optional external stop flag.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Checks are amortized: the clock is read once every this many ticks.
pub const CLOCK_STRIDE: u32 = 64;

/// A point in time after which a phase must stop, plus an optional flag that
/// an outside party (a signal handler, another thread) may raise to stop early.
#[derive(Clone, Debug, Default)]
pub struct Deadline {
    at: Option<Instant>,
    stop: Option<Arc<AtomicBool>>,
}

impl Deadline {
    /// Never expires on its own.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn after(budget: Duration) -> Self {
        Self {
            at: Some(Instant::now() + budget),
            stop: None,
        }
    }

    pub fn at(instant: Option<Instant>) -> Self {
        Self { at: instant, stop: None }
    }

    pub fn with_stop_flag(mut self, flag: Option<Arc<AtomicBool>>) -> Self {
        self.stop = flag;
        self
    }

    pub fn instant(&self) -> Option<Instant> {
        self.at
    }

    pub fn stop_flag(&self) -> Option<&Arc<AtomicBool>> {
        self.stop.as_ref()
    }

    /// The earlier of `self` and `now + budget`.
    pub fn min_after(&self, budget: Option<Duration>) -> Self {
        let other = budget.map(|b| Instant::now() + b);
        let at = match (self.at, other) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Self {
            at,
            stop: self.stop.clone(),
        }
    }

    pub fn stop_requested(&self) -> bool {
        self.stop
            .as_ref()
            .is_some_and(|f| f.load(Ordering::Relaxed))
    }

    pub fn expired(&self) -> bool {
        self.stop_requested() || self.at.is_some_and(|at| Instant::now() >= at)
    }

    /// Time left, `None` if unbounded.
    pub fn remaining(&self) -> Option<Duration> {
        self.at.map(|at| at.saturating_duration_since(Instant::now()))
    }
}

/// Amortized deadline polling for hot loops.
#[derive(Debug)]
pub(crate) struct Clock<'a> {
    deadline: &'a Deadline,
    ticks: u32,
    expired: bool,
}

impl<'a> Clock<'a> {
    pub(crate) fn new(deadline: &'a Deadline) -> Self {
        Self {
            deadline,
            ticks: 0,
            expired: deadline.expired(),
        }
    }

    /// Counts one unit of work; reads the clock every [`CLOCK_STRIDE`] ticks.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks += 1;
        if self.ticks >= CLOCK_STRIDE {
            self.ticks = 0;
            self.expired = self.deadline.expired();
        }
        self.expired
    }

    /// Reads the clock now.
    pub(crate) fn check(&mut self) -> bool {
        if !self.expired {
            self.ticks = 0;
            self.expired = self.deadline.expired();
        }
        self.expired
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unbounded_never_expires() {
        let d = Deadline::none();
        assert!(!d.expired());
        assert_eq!(d.remaining(), None);
        let mut c = Clock::new(&d);
        assert!(!(0..1000).any(|_| c.tick()));
    }

    #[test]
    fn zero_budget_is_expired() {
        let d = Deadline::after(Duration::ZERO);
        assert!(d.expired());
        assert!(Clock::new(&d).tick());
    }

    #[test]
    fn stop_flag() {
        let flag = Arc::new(AtomicBool::new(false));
        let d = Deadline::none().with_stop_flag(Some(flag.clone()));
        let mut c = Clock::new(&d);
        assert!(!c.check());
        flag.store(true, Ordering::Relaxed);
        assert!(d.expired());
        assert!(c.check());
    }

    #[test]
    fn min_after_takes_earlier() {
        let far = Deadline::after(Duration::from_secs(3600));
        let near = far.min_after(Some(Duration::ZERO));
        assert!(near.expired());
        assert_eq!(far.min_after(None).instant(), far.instant());
        assert!(Deadline::none().min_after(Some(Duration::from_secs(1))).instant().is_some());
    }
}
