//! Immutable CSR adjacency structure.

use std::iter;

/// Internal vertex identifier, `0..n`. External (file) identifiers are 1-indexed.
pub type Vertex = u32;

/// Undirected simple graph in compressed sparse row layout.
///
/// The neighbors of `v` are `nbr[off[v]..off[v + 1]]`, sorted ascending.
/// Self-loops and parallel edges are dropped during construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    off: Vec<usize>,
    nbr: Vec<Vertex>,
    m: usize,
}

impl Graph {
    /// Builds the CSR structure from an arbitrary edge list over `0..n`.
    ///
    /// Self-loops are ignored and duplicate edges (in either orientation)
    /// are collapsed, so `m()` is the cleaned edge count.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut cleaned: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| {
                assert!(
                    (u as usize) < n && (v as usize) < n,
                    "edge ({u}, {v}) out of range for n = {n}"
                );
                (u.min(v), u.max(v))
            })
            .collect();
        cleaned.sort_unstable();
        cleaned.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &cleaned {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut off = Vec::with_capacity(n + 1);
        off.push(0);
        for d in &degree {
            off.push(off.last().unwrap() + d);
        }

        let mut cursor = off[..n].to_vec();
        let mut nbr = vec![0; 2 * cleaned.len()];
        for &(u, v) in &cleaned {
            nbr[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            nbr[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            nbr[off[v]..off[v + 1]].sort_unstable();
        }

        Self {
            off,
            nbr,
            m: cleaned.len(),
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.off.len() - 1
    }

    /// Number of undirected edges after cleaning.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.off[v as usize + 1] - self.off[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighborhood N(v), ascending.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbr[self.off[v as usize]..self.off[v as usize + 1]]
    }

    /// Closed neighborhood N[v]: `v` first, then its neighbors.
    #[inline]
    pub fn closed_neighborhood(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        iter::once(v).chain(self.neighbors(v).iter().copied())
    }

    /// `true` iff `u` and `v` are adjacent (binary search on the sorted slice).
    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// `true` iff `x ∈ N[v]`.
    #[inline]
    pub fn closed_contains(&self, v: Vertex, x: Vertex) -> bool {
        v == x || self.has_edge(v, x)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n() as Vertex
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Raw offset array, length `n + 1`.
    pub fn offsets(&self) -> &[usize] {
        &self.off
    }

    /// Raw flat neighbor array, length `2m`.
    pub fn adjacency(&self) -> &[Vertex] {
        &self.nbr
    }
}
