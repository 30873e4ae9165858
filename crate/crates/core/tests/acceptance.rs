//! Acceptance gate. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p domset --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

mod common;

use std::io;
use std::time::{Duration, Instant};

use domset::anneal::AnnealConfig;
use domset::cli::{self, Env};
use domset::construct::greedy_ln;
use domset::pipeline::{solve, solve_traced, Algorithm, SolverConfig, Stage};
use domset::{brute_force_optimum, generate_instance, verify, write_ds, Graph, InstanceKind, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{dominates, eager_greedy, has_leaf_or_isolate, mixed_instance, small_instance};

fn report(id: &str, pass: bool, detail: String) {
    println!("[{}] {id}: {detail}", if pass { "PASS" } else { "FAIL" });
}

/// Attempt-bounded config: no wall clock, short annealing.
fn counted(algorithm: Algorithm, seed: u64, sa_epochs: u64) -> SolverConfig {
    SolverConfig {
        algorithm,
        seed,
        anneal: AnnealConfig {
            max_epochs: Some(sa_epochs),
            ..AnnealConfig::default()
        },
        ..SolverConfig::default()
    }
}

fn validity_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=2000);
            mixed_instance(&mut rng, n).1
        })
        .collect()
}

#[test]
fn c1_validity() {
    let start = Instant::now();
    let corpus = validity_corpus();
    let mut failures = 0;
    let mut runs = 0;
    for (i, g) in corpus.iter().enumerate() {
        for algorithm in Algorithm::ALL {
            let s = solve(g, &counted(algorithm, i as u64, 20));
            runs += 1;
            let ok = verify(g, &s).unwrap().valid && dominates(g, s.members());
            if !ok {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures == 0 && elapsed < Duration::from_secs(120);
    report(
        "C1 validity",
        pass,
        format!("{runs} runs over {} instances, {failures} invalid, {elapsed:.1?}", corpus.len()),
    );
    assert_eq!(failures, 0);
    assert!(elapsed < Duration::from_secs(120));
}

#[test]
fn c2_oracle_gap() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    let (mut optimal, mut worst_excess, mut greedy_violations) = (0, 0usize, 0);
    let total = 300;
    for i in 0..total {
        let g = small_instance(&mut rng);
        let (gamma, _) = brute_force_optimum(&g).unwrap();
        let h = solve(&g, &counted(Algorithm::Hedom5, i, 20)).len();
        optimal += (h == gamma) as usize;
        worst_excess = worst_excess.max(h - gamma);
        let bound = ((g.max_degree() as f64 + 1.0).ln() + 1.0) * gamma as f64;
        if greedy_ln(&g).len() as f64 > bound + 1e-9 {
            greedy_violations += 1;
        }
    }
    let ratio = optimal as f64 / total as f64;
    let elapsed = start.elapsed();
    let pass = ratio >= 0.85 && worst_excess <= 2 && greedy_violations == 0 && elapsed < Duration::from_secs(60);
    report(
        "C2 oracle gap",
        pass,
        format!(
            "hedom5 optimal on {optimal}/{total} ({:.1}%), worst excess {worst_excess}, greedy bound violations {greedy_violations}, {elapsed:.1?}",
            100.0 * ratio
        ),
    );
    assert!(ratio >= 0.85);
    assert!(worst_excess <= 2);
    assert_eq!(greedy_violations, 0);
    assert!(elapsed < Duration::from_secs(60));
}

#[test]
fn c3_comparative_ordering() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
    let total = 200;
    let (mut sum_h, mut sum_sa, mut sum_g) = (0usize, 0usize, 0usize);
    let mut wins_or_ties = 0;
    for i in 0..total {
        let n = rng.gen_range(200..=2000);
        let avg: f64 = rng.gen_range(2.0..20.0);
        let g = generate_instance(InstanceKind::Gnp { n, p: avg / (n - 1) as f64 }, rng.gen()).unwrap();
        let budgeted = |algorithm| SolverConfig {
            algorithm,
            seed: i,
            time_budget: Some(Duration::from_secs(1)),
            ..SolverConfig::default()
        };
        let h = solve(&g, &budgeted(Algorithm::Hedom5)).len();
        let sa = solve(&g, &budgeted(Algorithm::Sa)).len();
        let gr = solve(&g, &budgeted(Algorithm::Greedy)).len();
        sum_h += h;
        sum_sa += sa;
        sum_g += gr;
        wins_or_ties += (h <= gr) as usize;
    }
    let mean = |s: usize| s as f64 / total as f64;
    let ratio = wins_or_ties as f64 / total as f64;
    let elapsed = start.elapsed();
    let ordered = mean(sum_h) <= mean(sum_sa) && mean(sum_sa) <= mean(sum_g);
    let pass = ordered && ratio >= 0.90 && elapsed < Duration::from_secs(300);
    report(
        "C3 comparative ordering",
        pass,
        format!(
            "mean sizes hedom5 {:.2} / sa {:.2} / greedy {:.2}; hedom5 <= greedy on {:.1}%, {elapsed:.1?}",
            mean(sum_h),
            mean(sum_sa),
            mean(sum_g),
            100.0 * ratio
        ),
    );
    assert!(ordered);
    assert!(ratio >= 0.90);
    assert!(elapsed < Duration::from_secs(300));
}

#[test]
fn c4_stage_monotonicity() {
    let corpus = validity_corpus();
    let mut violations = 0;
    let mut patched = 0;
    for (i, g) in corpus.iter().enumerate() {
        let (_, trace) = solve_traced(g, &counted(Algorithm::Hedom5, i as u64, 1));
        let s1 = trace.size_after(Stage::Greedy).unwrap();
        let s2 = trace.size_after(Stage::Prune).unwrap();
        let s3 = trace.size_after(Stage::Swap).unwrap();
        if s2 > s1 || s3 > s2 {
            violations += 1;
        }
        if trace.patch_added() > 0 {
            patched += 1;
        }
    }
    let unpatched = 1.0 - patched as f64 / corpus.len() as f64;
    let pass = violations == 0 && unpatched >= 0.99;
    report(
        "C4 stage monotonicity",
        pass,
        format!(
            "{violations} monotonicity violations, patch needed on {patched}/{} runs",
            corpus.len()
        ),
    );
    assert_eq!(violations, 0);
    assert!(unpatched >= 0.99);
}

/// Connectivity from per-vertex neighbor bitmasks.
fn connected(n: usize, adj: &[u8]) -> bool {
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

#[test]
fn c5_lazy_eager_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    for n in 1..=7usize {
        let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let mut adj = [0u8; 7];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    adj[u as usize] |= 1 << v;
                    adj[v as usize] |= 1 << u;
                }
            }
            if !connected(n, &adj[..n]) {
                continue;
            }
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges);
            checked += 1;
            if greedy_ln(&g).members() != eager_greedy(&g).as_slice() {
                mismatches += 1;
            }
        }
    }
    let exhaustive = checked;
    let mut rng = ChaCha8Rng::seed_from_u64(0xC5);
    for _ in 0..200 {
        let n = rng.gen_range(8..=400);
        let g = mixed_instance(&mut rng, n).1;
        if greedy_ln(&g).members() != eager_greedy(&g).as_slice() {
            mismatches += 1;
        }
    }
    report(
        "C5 lazy-eager equivalence",
        mismatches == 0,
        format!(
            "{exhaustive} connected graphs with n <= 7 plus 200 random, {mismatches} mismatches, {:.1?}",
            start.elapsed()
        ),
    );
    assert_eq!(mismatches, 0);
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut env = Env {
        stdin: &mut io::empty(),
        stdout: &mut out,
        stderr: &mut err,
        stop: None,
    };
    let code = cli::run(std::iter::once("domset").chain(args.iter().copied()), &mut env);
    (code, out)
}

#[test]
fn c6_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    for i in 0..12 {
        let n = rng.gen_range(5..=600);
        let g = mixed_instance(&mut rng, n).1;
        std::fs::write(corpus.join(format!("inst{i:02}.ds")), write_ds(&g)).unwrap();
    }

    let mut identical = true;
    let mut compared = 0;
    for entry in std::fs::read_dir(&corpus).unwrap() {
        let path = entry.unwrap().path();
        let p = path.to_str().unwrap();
        for algo in ["hedom5", "greedy", "sa"] {
            let args = ["solve", p, "--algo", algo, "--seed", "7", "--no-wallclock", "--sa-epochs", "50"];
            let (c1, a) = run_cli(&args);
            let (c2, b) = run_cli(&args);
            identical &= c1 == 0 && c2 == 0 && a == b && !a.is_empty();
            compared += 1;
        }
    }

    let csv = |name: &str| {
        let out = dir.path().join(name);
        let (code, _) = run_cli(&[
            "bench",
            "--dir",
            corpus.to_str().unwrap(),
            "--algos",
            "greedy,sa,hedom5",
            "--seed",
            "7,8",
            "--no-wallclock",
            "--sa-epochs",
            "50",
            "--out",
            out.to_str().unwrap(),
            "--summary-out",
            dir.path().join(format!("{name}.summary")).to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        std::fs::read(out).unwrap()
    };
    let (first, second) = (csv("a.csv"), csv("b.csv"));
    let csv_identical = first == second && first.split(|&b| b == b'\n').count() == 12 * 3 * 2 + 2;
    let pass = identical && csv_identical;
    report(
        "C6 determinism",
        pass,
        format!("{compared} solve pairs identical: {identical}; bench CSV identical: {csv_identical}"),
    );
    assert!(identical);
    assert!(csv_identical);
}

#[test]
fn c7_reduction_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let (mut checked, mut larger, mut missing_isolates) = (0, 0, 0);
    while checked < 200 {
        let g = small_instance(&mut rng);
        if !has_leaf_or_isolate(&g) {
            continue;
        }
        checked += 1;
        let with = solve(&g, &counted(Algorithm::Hedom5, checked, 1));
        let without = solve(
            &g,
            &SolverConfig {
                reductions: false,
                ..counted(Algorithm::Hedom5, checked, 1)
            },
        );
        let (gamma, _) = brute_force_optimum(&g).unwrap();
        assert!(with.len() >= gamma && without.len() >= gamma);
        if with.len() > without.len() {
            larger += 1;
        }
        if g.vertices().any(|v| g.degree(v) == 0 && !with.contains(v)) {
            missing_isolates += 1;
        }
    }
    let pass = larger == 0 && missing_isolates == 0;
    report(
        "C7 reduction soundness",
        pass,
        format!("{checked} instances: reductions worse on {larger}, isolates missing on {missing_isolates}"),
    );
    assert_eq!(missing_isolates, 0);
    assert_eq!(larger, 0);
}

#[test]
fn c8_scale_smoke() {
    let n = 100_000;
    let g = generate_instance(InstanceKind::Gnp { n, p: 10.0 / (n - 1) as f64 }, 0xC8).unwrap();
    let cfg = SolverConfig {
        time_budget: Some(Duration::from_secs(10)),
        ..SolverConfig::default()
    };
    let start = Instant::now();
    let s = solve(&g, &cfg);
    let elapsed = start.elapsed();
    let valid = verify(&g, &s).unwrap().valid;
    let pass = valid && elapsed <= Duration::from_secs(10);
    report(
        "C8 scale smoke",
        pass,
        format!("n={n} m={} |D|={} valid={valid} in {elapsed:.2?}", g.m(), s.len()),
    );
    assert!(valid);
    assert!(elapsed <= Duration::from_secs(10));
}
