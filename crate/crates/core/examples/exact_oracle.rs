//! Compare heuristic answers with the exact domination number on small graphs.

use domset::{brute_force_optimum, generate_instance, greedy_ln, solve, InstanceKind, SolverConfig};

fn main() {
    let kinds = [
        InstanceKind::Gnp { n: 20, p: 0.15 },
        InstanceKind::Tree { n: 22 },
        InstanceKind::Grid { rows: 4, cols: 6 },
        InstanceKind::StarForest { stars: 5, max_leaves: 3 },
    ];
    for (seed, kind) in kinds.into_iter().enumerate() {
        let g = generate_instance(kind, seed as u64).unwrap();
        let (gamma, witness) = brute_force_optimum(&g).unwrap();
        let greedy = greedy_ln(&g).len();
        let hedom5 = solve(&g, &SolverConfig::default()).len();
        let ids: Vec<u32> = witness.iter().map(|v| v + 1).collect();
        println!("{kind}: gamma {gamma} {ids:?}, greedy {greedy}, hedom5 {hedom5}");
    }
}
