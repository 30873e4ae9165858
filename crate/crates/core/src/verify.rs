//! Domination checking and an exact solver for small graphs.

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::solution::Solution;

/// Largest instance [`brute_force_optimum`] accepts.
pub const ORACLE_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("solution is over {solution} vertices but the graph has {graph}")]
    UniverseMismatch { solution: usize, graph: usize },
    #[error("member {0} is not a vertex of the graph")]
    OutOfRange(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exact search is limited to {max} vertices, graph has {n}")]
pub struct OracleError {
    pub n: usize,
    pub max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Smallest undominated vertex (0-indexed), if any.
    pub first_uncovered: Option<Vertex>,
    pub size: usize,
}

/// Checks that every vertex is in `s` or adjacent to a member.
pub fn verify(g: &Graph, s: &Solution) -> Result<VerifyReport, VerifyError> {
    if s.universe() != g.n() {
        return Err(VerifyError::UniverseMismatch {
            solution: s.universe(),
            graph: g.n(),
        });
    }
    let mut covered = vec![false; g.n()];
    for &d in s.members() {
        if d as usize >= g.n() {
            return Err(VerifyError::OutOfRange(d));
        }
        for x in g.closed_neighborhood(d) {
            covered[x as usize] = true;
        }
    }
    let first_uncovered = covered.iter().position(|&c| !c).map(|v| v as Vertex);
    Ok(VerifyReport {
        valid: first_uncovered.is_none(),
        first_uncovered,
        size: s.len(),
    })
}

/// Minimum dominating set by iterative deepening over the lowest undominated
/// vertex: some member of its closed neighborhood must be chosen, so each
/// level branches on at most `Δ + 1` choices.
///
/// Returns `(γ, witness)` with the witness sorted ascending.
pub fn brute_force_optimum(g: &Graph) -> Result<(usize, Vec<Vertex>), OracleError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(OracleError { n, max: ORACLE_MAX_N });
    }
    let masks: Vec<u32> = g
        .vertices()
        .map(|v| g.closed_neighborhood(v).fold(0u32, |m, x| m | (1 << x)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let max_cover = g.max_degree() as u32 + 1;

    let mut chosen = Vec::with_capacity(n);
    for k in 0..=n {
        if search(&masks, full, 0, k, max_cover, &mut chosen) {
            chosen.sort_unstable();
            return Ok((k, chosen));
        }
    }
    unreachable!("V itself dominates");
}

fn search(
    masks: &[u32],
    full: u32,
    covered: u32,
    budget: usize,
    max_cover: u32,
    chosen: &mut Vec<Vertex>,
) -> bool {
    let missing = full & !covered;
    if missing == 0 {
        return true;
    }
    if budget == 0 || missing.count_ones() > budget as u32 * max_cover {
        return false;
    }
    let x = missing.trailing_zeros() as usize;
    let mut options = masks[x];
    while options != 0 {
        let t = options.trailing_zeros();
        options &= options - 1;
        chosen.push(t);
        if search(masks, full, covered | masks[t as usize], budget - 1, max_cover, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
