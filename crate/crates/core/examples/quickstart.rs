//! Solve a small graph with the default pipeline and print the answer.

use domset::{parse_ds, solve, verify, write_solution, SolverConfig};

const GRAPH: &str = "\
c two stars joined by a path
p ds 9 8
1 2
1 3
1 4
4 5
5 6
6 7
6 8
6 9
";

fn main() {
    let g = parse_ds(GRAPH.as_bytes()).expect("valid .ds input");
    let d = solve(&g, &SolverConfig::default());
    let report = verify(&g, &d).unwrap();
    println!("n={} m={} |D|={} valid={}", g.n(), g.m(), d.len(), report.valid);
    print!("{}", write_solution(&d));
}
