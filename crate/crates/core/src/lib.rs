//! Minimum dominating set heuristics.
//!
//! The main solver, `hedom5`, chains fast reductions, a lazy gain-based
//! greedy, a reverse-order pruning pass and a budgeted 1-swap search, then
//! patches any gap so the answer always dominates. A plain greedy baseline
//! and greedy-seeded simulated annealing are provided for comparison,
//! together with a verifier, an exact solver for small graphs, random
//! instance generators and a benchmark harness.
//!
//! ```
//! use domset::{parse_ds, solve, verify, SolverConfig};
//!
//! let g = parse_ds(b"p ds 5 4\n1 2\n1 3\n1 4\n4 5\n").unwrap();
//! let d = solve(&g, &SolverConfig::default());
//! assert!(verify(&g, &d).unwrap().valid);
//! assert_eq!(d.len(), 2);
//! ```

pub mod anneal;
pub mod bench;
pub mod budget;
pub mod cli;
pub mod construct;
pub mod ds;
pub mod gen;
pub mod graph;
pub mod pipeline;
pub mod prune;
pub mod reduce;
pub mod solution;
pub mod swap;
pub mod verify;

pub use anneal::{sa_solve, AnnealConfig};
pub use construct::{greedy_ln, lazy_greedy};
pub use ds::{parse_ds, read_ds, write_ds, ParseError};
pub use gen::{generate_instance, InstanceKind};
pub use graph::{Graph, Vertex};
pub use pipeline::{solve, solve_traced, Algorithm, SolverConfig, Stage, Trace};
pub use prune::{backward_prune, compute_cover_counts, CoverCounts};
pub use reduce::CoverState;
pub use solution::{parse_solution, write_solution, Solution};
pub use swap::{safety_patch, swap_phase, SwapBudget};
pub use verify::{brute_force_optimum, verify, VerifyReport};
