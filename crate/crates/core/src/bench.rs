//! Runs an algorithm matrix over a directory of `.ds` instances and records
//! one verified result per (instance, algorithm, seed).

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::anneal::AnnealConfig;
use crate::ds::read_ds;
use crate::graph::Graph;
use crate::pipeline::{solve, Algorithm, SolverConfig};
use crate::swap::DEFAULT_ATTEMPT_CAP;
use crate::verify::{brute_force_optimum, verify};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot list {}: {source}", .dir.display())]
    Dir { dir: PathBuf, source: io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub algos: Vec<Algorithm>,
    pub seeds: Vec<u64>,
    pub time_budget: Option<Duration>,
    pub attempt_cap: u32,
    pub anneal: AnnealConfig,
    /// Record wall time per run. Off in deterministic mode so the CSV is reproducible.
    pub wallclock: bool,
    /// Solve exactly for instances up to this many vertices (0 disables).
    pub oracle_max_n: usize,
    pub parallel: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            algos: Algorithm::ALL.to_vec(),
            seeds: vec![0],
            time_budget: None,
            attempt_cap: DEFAULT_ATTEMPT_CAP,
            anneal: AnnealConfig::default(),
            wallclock: false,
            oracle_max_n: 16,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub algo: Algorithm,
    pub seed: u64,
    pub n: Option<usize>,
    pub m: Option<usize>,
    /// Size of the verified solution; `None` for failed runs.
    pub size: Option<usize>,
    pub opt: Option<usize>,
    pub gap: Option<usize>,
    pub valid: bool,
    pub ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgoSummary {
    pub algo: Algorithm,
    pub runs: usize,
    pub valid: usize,
    pub mean_size: Option<f64>,
    /// Runs where this algorithm matched the best valid size for that (instance, seed).
    pub wins: usize,
    pub mean_gap: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRecord>,
    pub summaries: Vec<AlgoSummary>,
}

/// An instance that may have failed to load.
pub type LoadedInstance = (String, Result<Graph, String>);

/// Loads every `*.ds` file in `dir` (sorted by name) and benchmarks it.
/// Unreadable or malformed files become failed rows.
pub fn run_bench(dir: &Path, opts: &BenchOptions) -> Result<BenchReport, BenchError> {
    let to_err = |source| BenchError::Dir {
        dir: dir.to_owned(),
        source,
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(to_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "ds"))
        .collect();
    paths.sort();
    let instances = paths
        .iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let graph = fs::File::open(p)
                .map_err(|e| e.to_string())
                .and_then(|f| read_ds(io::BufReader::new(f)).map_err(|e| e.to_string()));
            (name, graph)
        })
        .collect();
    Ok(run_bench_on(instances, opts))
}

/// Benchmarks already-loaded instances.
pub fn run_bench_on(instances: Vec<LoadedInstance>, opts: &BenchOptions) -> BenchReport {
    let per_instance = |(name, graph): &LoadedInstance| -> Vec<BenchRecord> {
        let g = match graph {
            Ok(g) => g,
            Err(_) => {
                return opts
                    .algos
                    .iter()
                    .flat_map(|&algo| opts.seeds.iter().map(move |&seed| (algo, seed)))
                    .map(|(algo, seed)| BenchRecord {
                        instance: name.clone(),
                        algo,
                        seed,
                        n: None,
                        m: None,
                        size: None,
                        opt: None,
                        gap: None,
                        valid: false,
                        ms: None,
                    })
                    .collect();
            }
        };
        let opt = (g.n() <= opts.oracle_max_n)
            .then(|| brute_force_optimum(g).ok().map(|(gamma, _)| gamma))
            .flatten();
        let mut rows = Vec::with_capacity(opts.algos.len() * opts.seeds.len());
        for &algo in &opts.algos {
            for &seed in &opts.seeds {
                rows.push(run_one(name, g, algo, seed, opt, opts));
            }
        }
        rows
    };

    let rows: Vec<BenchRecord> = if opts.parallel {
        instances.par_iter().flat_map_iter(per_instance).collect()
    } else {
        instances.iter().flat_map(per_instance).collect()
    };
    let summaries = summarize(&rows, &opts.algos);
    BenchReport { rows, summaries }
}

fn run_one(
    name: &str,
    g: &Graph,
    algo: Algorithm,
    seed: u64,
    opt: Option<usize>,
    opts: &BenchOptions,
) -> BenchRecord {
    let cfg = SolverConfig {
        algorithm: algo,
        time_budget: opts.time_budget,
        attempt_cap: opts.attempt_cap,
        seed,
        anneal: opts.anneal.clone(),
        ..SolverConfig::default()
    };
    let start = Instant::now();
    let solution = solve(g, &cfg);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    // The solver's own check is not trusted here.
    let valid = verify(g, &solution).is_ok_and(|r| r.valid);
    let size = valid.then_some(solution.len());
    BenchRecord {
        instance: name.to_owned(),
        algo,
        seed,
        n: Some(g.n()),
        m: Some(g.m()),
        size,
        opt,
        gap: size.zip(opt).map(|(s, o)| s - o),
        valid,
        ms: opts.wallclock.then_some(ms),
    }
}

fn summarize(rows: &[BenchRecord], algos: &[Algorithm]) -> Vec<AlgoSummary> {
    let mut best: BTreeMap<(&str, u64), usize> = BTreeMap::new();
    for r in rows {
        if let Some(size) = r.size {
            let slot = best.entry((&r.instance, r.seed)).or_insert(size);
            *slot = (*slot).min(size);
        }
    }
    let mean = |xs: &[usize]| (!xs.is_empty()).then(|| xs.iter().sum::<usize>() as f64 / xs.len() as f64);

    algos
        .iter()
        .map(|&algo| {
            let mine: Vec<&BenchRecord> = rows.iter().filter(|r| r.algo == algo).collect();
            let sizes: Vec<usize> = mine.iter().filter_map(|r| r.size).collect();
            let gaps: Vec<usize> = mine.iter().filter_map(|r| r.gap).collect();
            let wins = mine
                .iter()
                .filter(|r| r.size.is_some() && r.size == best.get(&(r.instance.as_str(), r.seed)).copied())
                .count();
            AlgoSummary {
                algo,
                runs: mine.len(),
                valid: sizes.len(),
                mean_size: mean(&sizes),
                wins,
                mean_gap: mean(&gaps),
            }
        })
        .collect()
}

fn opt_field<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes `instance,algo,seed,n,m,size,opt,gap,valid,ms`.
pub fn write_csv<W: Write>(rows: &[BenchRecord], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["instance", "algo", "seed", "n", "m", "size", "opt", "gap", "valid", "ms"])?;
    for r in rows {
        w.write_record([
            r.instance.clone(),
            r.algo.to_string(),
            r.seed.to_string(),
            opt_field(r.n),
            opt_field(r.m),
            opt_field(r.size),
            opt_field(r.opt),
            opt_field(r.gap),
            r.valid.to_string(),
            r.ms.map(|ms| format!("{ms:.3}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `algo,runs,valid,mean_size,wins,mean_gap`.
pub fn write_summary_csv<W: Write>(summaries: &[AlgoSummary], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["algo", "runs", "valid", "mean_size", "wins", "mean_gap"])?;
    for s in summaries {
        w.write_record([
            s.algo.to_string(),
            s.runs.to_string(),
            s.valid.to_string(),
            s.mean_size.map(|x| format!("{x:.3}")).unwrap_or_default(),
            s.wins.to_string(),
            s.mean_gap.map(|x| format!("{x:.3}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
