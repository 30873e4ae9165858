//! The plain greedy baseline next to hedom5, and the lazy greedy used inside
//! it driven by hand from a partially built state.

use domset::{generate_instance, greedy_ln, lazy_greedy, solve, CoverState, InstanceKind, SolverConfig};

fn main() {
    let g = generate_instance(InstanceKind::Grid { rows: 30, cols: 30 }, 0).unwrap();

    let baseline = greedy_ln(&g);
    let hedom5 = solve(&g, &SolverConfig::default());
    println!("30x30 grid: greedy {} hedom5 {}", baseline.len(), hedom5.len());

    // Fix the four corners first, then let the greedy finish.
    let mut state = CoverState::new(&g);
    for v in [0, 29, 870, 899] {
        state.add_to_d(&g, v);
    }
    let added = lazy_greedy(&mut state, &g);
    println!(
        "corners + greedy: {} vertices ({added} picked by greedy), {} undominated",
        state.solution().len(),
        state.undominated_count()
    );
}
