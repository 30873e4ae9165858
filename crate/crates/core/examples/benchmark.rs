//! Benchmark all three algorithms on generated instances and print the CSV.

use std::io;

use domset::bench::{run_bench_on, write_csv, write_summary_csv, BenchOptions};
use domset::{generate_instance, InstanceKind};

fn main() {
    let instances = [
        ("gnp-14", InstanceKind::Gnp { n: 14, p: 0.25 }),
        ("tree-300", InstanceKind::Tree { n: 300 }),
        ("grid-20x20", InstanceKind::Grid { rows: 20, cols: 20 }),
        ("gnp-1000", InstanceKind::Gnp { n: 1000, p: 0.005 }),
    ]
    .into_iter()
    .map(|(name, kind)| (name.to_string(), Ok(generate_instance(kind, 3).unwrap())))
    .collect();

    let opts = BenchOptions {
        seeds: vec![0, 1],
        anneal: domset::AnnealConfig {
            max_epochs: Some(200),
            ..Default::default()
        },
        ..BenchOptions::default()
    };
    let report = run_bench_on(instances, &opts);
    write_csv(&report.rows, io::stdout()).unwrap();
    println!();
    write_summary_csv(&report.summaries, io::stdout()).unwrap();
}
