//! Greedy-seeded simulated annealing with a custom schedule.

use domset::{generate_instance, greedy_ln, sa_solve, verify, AnnealConfig, InstanceKind};

fn main() {
    let n = 2_000;
    let g = generate_instance(InstanceKind::Gnp { n, p: 8.0 / n as f64 }, 11).unwrap();
    let seed_solution = greedy_ln(&g);

    for (t0, cool) in [(1.0, 0.995), (2.0, 0.99), (0.5, 0.999)] {
        let cfg = AnnealConfig {
            initial_temperature: t0,
            cooling_factor: cool,
            max_epochs: Some(300),
            seed: 1,
            ..AnnealConfig::default()
        };
        let d = sa_solve(&g, &seed_solution, &cfg).unwrap();
        assert!(verify(&g, &d).unwrap().valid);
        println!("t0={t0:<4} cool={cool:<6} greedy {} -> sa {}", seed_solution.len(), d.len());
    }
}
