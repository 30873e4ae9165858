//! The pruning and 1-swap stages applied step by step to a bloated set.
//!
//! Exchanges that leave the size unchanged are kept, so on a path the
//! search keeps shifting members until the sweep cap runs out.

use domset::swap::{swap_phase, uniquely_covered, SwapBudget};
use domset::{backward_prune, compute_cover_counts, Graph, Solution};

fn main() {
    // P8 (0..7) with every vertex in D.
    let g = Graph::from_edges(8, (1..8u32).map(|v| (v - 1, v)));
    let mut d = Solution::from_members(8, 0..8).unwrap();
    let mut counts = compute_cover_counts(&g, &d);

    let dropped = backward_prune(&g, &mut d, &mut counts);
    println!("prune dropped {dropped}: {:?}", d.members());

    for &w in d.members() {
        println!("  {w} privately covers {:?}", uniquely_covered(&g, &counts, w));
    }

    let budget = SwapBudget::new(20, None).unwrap();
    let stats = swap_phase(&g, &mut d, &mut counts, &budget);
    println!("{stats:?}");
    println!("final {:?}", d.sorted_members());
}
