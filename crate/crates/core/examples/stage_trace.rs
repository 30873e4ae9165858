//! Watch the size of D after each hedom5 stage on a random sparse graph.

use std::time::Duration;

use domset::{generate_instance, solve_traced, InstanceKind, SolverConfig, Stage};

fn main() {
    let n = 5_000;
    let g = generate_instance(InstanceKind::Gnp { n, p: 4.0 / n as f64 }, 7).unwrap();
    let cfg = SolverConfig {
        time_budget: Some(Duration::from_secs(2)),
        ..SolverConfig::default()
    };
    let (d, trace) = solve_traced(&g, &cfg);
    print!("{trace}");

    let greedy = trace.size_after(Stage::Greedy).unwrap();
    println!("greedy {greedy} -> final {} ({} patched)", d.len(), trace.patch_added());
}
