//! Seeded random instance families.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{0}")]
    InvalidParams(String),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InstanceKind {
    /// Erdős–Rényi G(n, p).
    Gnp { n: usize, p: f64 },
    /// Uniform random recursive tree with shuffled labels.
    Tree { n: usize },
    /// `rows × cols` 4-neighbor grid.
    Grid { rows: usize, cols: usize },
    /// `stars` disjoint stars, each with `0..=max_leaves` leaves
    /// (a star without leaves is an isolated vertex).
    StarForest { stars: usize, max_leaves: usize },
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InstanceKind::Gnp { n, p } => write!(f, "gnp_n{n}_p{p}"),
            InstanceKind::Tree { n } => write!(f, "tree_n{n}"),
            InstanceKind::Grid { rows, cols } => write!(f, "grid_{rows}x{cols}"),
            InstanceKind::StarForest { stars, max_leaves } => {
                write!(f, "starforest_s{stars}_l{max_leaves}")
            }
        }
    }
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParams(msg.into())
}

/// Builds an instance of `kind`; identical `(kind, seed)` give identical graphs.
pub fn generate_instance(kind: InstanceKind, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        InstanceKind::Gnp { n, p } => {
            if n == 0 {
                return Err(invalid("gnp needs n >= 1"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid("gnp needs p in [0, 1]"));
            }
            Ok(Graph::from_edges(n, gnp_edges(n, p, &mut rng)))
        }
        InstanceKind::Tree { n } => {
            if n == 0 {
                return Err(invalid("tree needs n >= 1"));
            }
            let mut label: Vec<Vertex> = (0..n as Vertex).collect();
            label.shuffle(&mut rng);
            let edges: Vec<_> = (1..n)
                .map(|i| (label[i], label[rng.gen_range(0..i)]))
                .collect();
            Ok(Graph::from_edges(n, edges))
        }
        InstanceKind::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(invalid("grid needs rows, cols >= 1"));
            }
            let id = |r: usize, c: usize| (r * cols + c) as Vertex;
            let mut edges = Vec::with_capacity(2 * rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Ok(Graph::from_edges(rows * cols, edges))
        }
        InstanceKind::StarForest { stars, max_leaves } => {
            if stars == 0 {
                return Err(invalid("star forest needs at least one star"));
            }
            let mut edges = Vec::new();
            let mut n = 0 as Vertex;
            for _ in 0..stars {
                let center = n;
                let leaves = rng.gen_range(0..=max_leaves) as Vertex;
                edges.extend((1..=leaves).map(|l| (center, center + l)));
                n += leaves + 1;
            }
            Ok(Graph::from_edges(n as usize, edges))
        }
    }
}

/// Geometric edge skipping (Batagelj & Brandes), O(n + m) expected.
fn gnp_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    if p <= 0.0 || n < 2 {
        return edges;
    }
    if p >= 1.0 {
        for u in 0..n as Vertex {
            edges.extend((u + 1..n as Vertex).map(|v| (u, v)));
        }
        return edges;
    }
    let log_q = (1.0 - p).ln();
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let r: f64 = rng.gen();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((v as Vertex, w as Vertex));
        }
    }
    edges
}
