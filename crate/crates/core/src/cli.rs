//! The `domset` command line: `solve`, `verify`, `oracle`, `gen`, `bench`.
//!
//! Exit codes: 0 success, 1 invalid solution, 2 usage, 3 input/output.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::AtomicBool;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::anneal::{AnnealConfig, DEFAULT_MAX_EPOCHS};
use crate::bench::{run_bench, write_csv, write_summary_csv, BenchOptions};
use crate::ds::{parse_ds, write_ds};
use crate::gen::{generate_instance, InstanceKind};
use crate::graph::Graph;
use crate::pipeline::{solve_traced, Algorithm, SolverConfig};
use crate::solution::{parse_solution, write_solution};
use crate::swap::DEFAULT_ATTEMPT_CAP;
use crate::verify::{brute_force_optimum, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "domset", version, about = "Minimum dominating set heuristics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a `.ds` instance (file or stdin) and print the solution.
    Solve {
        /// Input graph; reads stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, default_value = "hedom5", value_parser = parse_algo)]
        algo: Algorithm,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print per-stage sizes and timings to stderr.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check that a solution file dominates a graph.
    Verify { graph: PathBuf, solution: PathBuf },
    /// Exact domination number and a witness (small graphs only).
    Oracle { input: Option<PathBuf> },
    /// Write a random instance in `.ds` format.
    Gen(GenArgs),
    /// Run an algorithm matrix over a directory of `.ds` files and write CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
struct SolverArgs {
    /// Global time budget in milliseconds.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    time_budget: u64,
    /// Sweeps of the 1-swap phase.
    #[arg(long, default_value_t = DEFAULT_ATTEMPT_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    attempt_cap: u32,
    /// Initial annealing temperature.
    #[arg(long, default_value_t = 1.0)]
    sa_t0: f64,
    /// Geometric cooling factor per epoch.
    #[arg(long, default_value_t = 0.995)]
    sa_cool: f64,
    /// Epoch limit for annealing.
    #[arg(long, default_value_t = DEFAULT_MAX_EPOCHS)]
    sa_epochs: u64,
    /// Proposals per epoch (default max(100, n)).
    #[arg(long)]
    sa_moves: Option<usize>,
    /// Skip the isolate and leaf rules.
    #[arg(long)]
    no_reductions: bool,
    /// Ignore the wall clock; runs are bounded by attempt and epoch counts only.
    #[arg(long)]
    no_wallclock: bool,
}

impl SolverArgs {
    fn time_budget(&self) -> Option<Duration> {
        (!self.no_wallclock).then(|| Duration::from_millis(self.time_budget))
    }

    fn anneal(&self) -> AnnealConfig {
        AnnealConfig {
            initial_temperature: self.sa_t0,
            cooling_factor: self.sa_cool,
            moves_per_epoch: self.sa_moves,
            seed: 0,
            time_budget: None,
            max_epochs: Some(self.sa_epochs),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Gnp,
    Tree,
    Grid,
    StarForest,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertex count (gnp, tree).
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (gnp).
    #[arg(long, conflicts_with = "avg_degree")]
    p: Option<f64>,
    /// Expected average degree, an alternative to `--p` (gnp).
    #[arg(long)]
    avg_degree: Option<f64>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    stars: Option<usize>,
    #[arg(long, default_value_t = 5)]
    max_leaves: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    dir: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "greedy,sa,hedom5", value_parser = parse_algo)]
    algos: Vec<Algorithm>,
    /// One or more seeds, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    seed: Vec<u64>,
    /// Result CSV; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-algorithm summary CSV; stderr when omitted.
    #[arg(long)]
    summary_out: Option<PathBuf>,
    /// Solve exactly up to this many vertices to fill `opt` and `gap`.
    #[arg(long, default_value_t = 16)]
    oracle_max_n: usize,
    /// Run instances one at a time.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    solver: SolverArgs,
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: crate::pipeline::UnknownAlgorithm| e.to_string())
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn io(msg: impl Into<String>) -> Self {
        Self { code: EXIT_IO, msg: msg.into() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, msg: msg.into() }
    }
}

/// Streams and signals the command runs against.
pub struct Env<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Raised on a termination request; the solver then returns its best valid set.
    pub stop: Option<Arc<AtomicBool>>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, env: &mut Env<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { env.stderr } else { env.stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, env) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(env.stderr, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(command: Command, env: &mut Env<'_>) -> Result<i32, Failure> {
    match command {
        Command::Solve {
            input,
            algo,
            seed,
            trace,
            solver,
        } => {
            let g = load_graph(input.as_deref(), env)?;
            let cfg = SolverConfig {
                algorithm: algo,
                time_budget: solver.time_budget(),
                attempt_cap: solver.attempt_cap,
                seed,
                reductions: !solver.no_reductions,
                anneal: solver.anneal(),
                stop: env.stop.clone(),
            };
            cfg.anneal.validate().map_err(|e| Failure::usage(e.to_string()))?;
            let (solution, stages) = solve_traced(&g, &cfg);
            if trace {
                write!(env.stderr, "{stages}").map_err(|e| Failure::io(e.to_string()))?;
            }
            emit(env.stdout, write_solution(&solution).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, solution } => {
            let g = load_graph(Some(&graph), env)?;
            let text = fs::read_to_string(&solution)
                .map_err(|e| Failure::io(format!("{}: {e}", solution.display())))?;
            let s = match parse_solution(&text, g.n()) {
                Ok(s) => s,
                Err(e) => {
                    emit(env.stdout, format!("invalid: {e}\n").as_bytes())?;
                    return Ok(EXIT_INVALID);
                }
            };
            let report = verify(&g, &s).expect("parsed against this graph");
            match report.first_uncovered {
                None => {
                    emit(env.stdout, format!("valid size={}\n", report.size).as_bytes())?;
                    Ok(EXIT_OK)
                }
                Some(x) => {
                    let line = format!("invalid: vertex {} is not dominated\n", x + 1);
                    emit(env.stdout, line.as_bytes())?;
                    Ok(EXIT_INVALID)
                }
            }
        }
        Command::Oracle { input } => {
            let g = load_graph(input.as_deref(), env)?;
            let (gamma, witness) = brute_force_optimum(&g).map_err(|e| Failure::usage(e.to_string()))?;
            let s = crate::solution::Solution::from_members(g.n(), witness).expect("witness in range");
            debug_assert_eq!(s.len(), gamma);
            emit(env.stdout, write_solution(&s).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Gen(args) => {
            let kind = instance_kind(&args)?;
            let g = generate_instance(kind, args.seed).map_err(|e| Failure::usage(e.to_string()))?;
            let text = format!("c {kind} seed={}\n{}", args.seed, write_ds(&g));
            match &args.out {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
                None => emit(env.stdout, text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench(args) => {
            let anneal = args.solver.anneal();
            anneal.validate().map_err(|e| Failure::usage(e.to_string()))?;
            let opts = BenchOptions {
                algos: args.algos,
                seeds: args.seed,
                time_budget: args.solver.time_budget(),
                attempt_cap: args.solver.attempt_cap,
                anneal,
                wallclock: !args.solver.no_wallclock,
                oracle_max_n: args.oracle_max_n,
                parallel: !args.sequential,
            };
            let report = run_bench(&args.dir, &opts).map_err(|e| Failure::io(e.to_string()))?;
            if report.rows.is_empty() {
                let _ = writeln!(env.stderr, "warning: no .ds files in {}", args.dir.display());
            }
            let failed = report.rows.iter().filter(|r| !r.valid).count();
            if failed > 0 {
                let _ = writeln!(env.stderr, "warning: {failed} failed runs");
            }

            let mut rows = Vec::new();
            write_csv(&report.rows, &mut rows).map_err(|e| Failure::io(e.to_string()))?;
            match &args.out {
                Some(path) => fs::write(path, rows)
                    .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
                None => emit(env.stdout, &rows)?,
            }
            let mut summary = Vec::new();
            write_summary_csv(&report.summaries, &mut summary).map_err(|e| Failure::io(e.to_string()))?;
            match &args.summary_out {
                Some(path) => fs::write(path, summary)
                    .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
                None => emit(env.stderr, &summary)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit(sink: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    sink.write_all(bytes)
        .and_then(|_| sink.flush())
        .map_err(|e| Failure::io(e.to_string()))
}

fn load_graph(path: Option<&Path>, env: &mut Env<'_>) -> Result<Graph, Failure> {
    let (name, bytes) = match path {
        Some(p) => (
            p.display().to_string(),
            fs::read(p).map_err(|e| Failure::io(format!("{}: {e}", p.display())))?,
        ),
        None => {
            let mut buf = Vec::new();
            env.stdin
                .read_to_end(&mut buf)
                .map_err(|e| Failure::io(format!("stdin: {e}")))?;
            ("stdin".to_owned(), buf)
        }
    };
    parse_ds(&bytes).map_err(|e| Failure::io(format!("{name}: {e}")))
}

fn instance_kind(args: &GenArgs) -> Result<InstanceKind, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::usage(format!("--{flag} is required for this kind")));
    Ok(match args.kind {
        Kind::Gnp => {
            let n = need(args.n, "n")?;
            let p = match (args.p, args.avg_degree) {
                (Some(p), _) => p,
                (None, Some(d)) if n > 1 => (d / (n - 1) as f64).min(1.0),
                (None, Some(_)) => 0.0,
                (None, None) => return Err(Failure::usage("--p or --avg-degree is required for gnp")),
            };
            InstanceKind::Gnp { n, p }
        }
        Kind::Tree => InstanceKind::Tree { n: need(args.n, "n")? },
        Kind::Grid => InstanceKind::Grid {
            rows: need(args.rows, "rows")?,
            cols: need(args.cols, "cols")?,
        },
        Kind::StarForest => InstanceKind::StarForest {
            stars: need(args.stars, "stars")?,
            max_leaves: args.max_leaves,
        },
    })
}
