//! Test-only oracles and corpus builders.
#![allow(dead_code)]

use domset::{generate_instance, Graph, InstanceKind, Vertex};
use rand::Rng;

/// Greedy that rescans every vertex after each pick; strict `>` over
/// ascending ids keeps the smallest id among equal gains.
pub fn eager_greedy(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut left = n;
    let mut picked = Vec::new();
    while left > 0 {
        let mut best = (0usize, 0 as Vertex);
        for v in 0..n as Vertex {
            let gain = std::iter::once(v)
                .chain(g.neighbors(v).iter().copied())
                .filter(|&x| !dominated[x as usize])
                .count();
            if gain > best.0 {
                best = (gain, v);
            }
        }
        let v = best.1;
        picked.push(v);
        for x in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !dominated[x as usize] {
                dominated[x as usize] = true;
                left -= 1;
            }
        }
    }
    picked
}

/// Domination check written against the raw adjacency, separate from `domset::verify`.
pub fn dominates(g: &Graph, members: &[Vertex]) -> bool {
    let mut covered = vec![false; g.n()];
    for &d in members {
        covered[d as usize] = true;
        for &x in g.neighbors(d) {
            covered[x as usize] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Exhaustive domination number by subset enumeration (n ≤ 20).
pub fn enumerate_gamma(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n as Vertex)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &x| m | (1 << x)))
        .collect();
    let full = (1u32 << n) - 1;
    (0u32..=full)
        .filter(|&set| {
            let mut cov = 0u32;
            let mut rest = set;
            while rest != 0 {
                cov |= masks[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            cov == full
        })
        .map(|set| set.count_ones() as usize)
        .min()
        .unwrap()
}

/// A random instance of one of the four families with roughly `n` vertices.
pub fn mixed_instance<R: Rng>(rng: &mut R, n: usize) -> (InstanceKind, Graph) {
    let n = n.max(1);
    let kind = match rng.gen_range(0..4) {
        0 => {
            let avg: f64 = rng.gen_range(0.5..12.0);
            let p = if n > 1 { (avg / (n - 1) as f64).min(1.0) } else { 0.0 };
            InstanceKind::Gnp { n, p }
        }
        1 => InstanceKind::Tree { n },
        2 => {
            let rows = rng.gen_range(1..=((n as f64).sqrt() as usize).max(1));
            InstanceKind::Grid { rows, cols: (n / rows).max(1) }
        }
        _ => {
            let max_leaves = rng.gen_range(0..=8);
            InstanceKind::StarForest {
                stars: (n / (max_leaves / 2 + 1)).max(1),
                max_leaves,
            }
        }
    };
    let g = generate_instance(kind, rng.gen()).unwrap();
    (kind, g)
}

/// A small instance (n ≤ 16) from a broader mix, including dense gnp.
pub fn small_instance<R: Rng>(rng: &mut R) -> Graph {
    loop {
        let n = rng.gen_range(1..=16);
        let g = if rng.gen_bool(0.5) {
            let p = rng.gen_range(0.05..0.7);
            generate_instance(InstanceKind::Gnp { n, p }, rng.gen()).unwrap()
        } else {
            mixed_instance(rng, n).1
        };
        if g.n() <= 16 {
            return g;
        }
    }
}

pub fn has_leaf_or_isolate(g: &Graph) -> bool {
    g.vertices().any(|v| g.degree(v) <= 1)
}
