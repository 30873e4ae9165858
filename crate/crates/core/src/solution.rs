//! Insertion-ordered dominating-set candidates and the solution file format.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: u64, n: usize },
    #[error("vertex {0} listed twice")]
    Duplicate(u64),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

/// A vertex set over `0..n` that remembers the order in which members were added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    members: Vec<Vertex>,
    in_set: Vec<bool>,
}

impl Solution {
    pub fn new(n: usize) -> Self {
        Self {
            members: Vec::new(),
            in_set: vec![false; n],
        }
    }

    /// Builds a solution from 0-indexed members, keeping their order.
    pub fn from_members<I>(n: usize, members: I) -> Result<Self, SolutionError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut s = Self::new(n);
        for v in members {
            if v as usize >= n {
                return Err(SolutionError::OutOfRange { vertex: v as u64, n });
            }
            if !s.insert(v) {
                return Err(SolutionError::Duplicate(v as u64));
            }
        }
        Ok(s)
    }

    /// Size of the vertex universe this set lives in.
    pub fn universe(&self) -> usize {
        self.in_set.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.in_set[v as usize]
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn sorted_members(&self) -> Vec<Vertex> {
        let mut sorted = self.members.clone();
        sorted.sort_unstable();
        sorted
    }

    /// Appends `v`; returns `false` if it was already a member.
    pub fn insert(&mut self, v: Vertex) -> bool {
        if self.in_set[v as usize] {
            return false;
        }
        self.in_set[v as usize] = true;
        self.members.push(v);
        true
    }

    /// Removes `v`, keeping the relative order of the remaining members.
    pub fn remove(&mut self, v: Vertex) -> bool {
        if !self.in_set[v as usize] {
            return false;
        }
        self.in_set[v as usize] = false;
        let pos = self.members.iter().position(|&x| x == v).unwrap();
        self.members.remove(pos);
        true
    }

    /// Keeps the members for which `keep` returns `true`, preserving order.
    pub fn retain(&mut self, mut keep: impl FnMut(Vertex) -> bool) {
        let in_set = &mut self.in_set;
        self.members.retain(|&v| {
            let k = keep(v);
            if !k {
                in_set[v as usize] = false;
            }
            k
        });
    }
}

/// Solution file: size on the first line, then one 1-indexed id per line, ascending.
pub fn write_solution(s: &Solution) -> String {
    let mut out = String::with_capacity(8 * (s.len() + 1));
    writeln!(out, "{}", s.len()).unwrap();
    for v in s.sorted_members() {
        writeln!(out, "{}", v + 1).unwrap();
    }
    out
}

/// Parses a solution file for a graph with `n` vertices.
///
/// Comment lines starting with `c` and blank lines are skipped. The leading
/// count must match the number of listed vertices.
pub fn parse_solution(text: &str, n: usize) -> Result<Solution, SolutionError> {
    let mut declared: Option<usize> = None;
    let mut members = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        last_line = i + 1;
        let token = line.trim();
        if token.is_empty() || token.starts_with('c') {
            continue;
        }
        let value: u64 = token.parse().map_err(|_| SolutionError::Malformed {
            line: i + 1,
            msg: format!("expected a single integer, found `{token}`"),
        })?;
        if declared.is_none() {
            declared = Some(value as usize);
            continue;
        }
        if value == 0 || value > n as u64 {
            return Err(SolutionError::OutOfRange { vertex: value, n });
        }
        members.push((value - 1) as Vertex);
    }
    let declared = declared.ok_or(SolutionError::Malformed {
        line: last_line + 1,
        msg: "missing solution size".into(),
    })?;
    if declared != members.len() {
        return Err(SolutionError::Malformed {
            line: last_line + 1,
            msg: format!("declared {declared} vertices, found {}", members.len()),
        });
    }
    Solution::from_members(n, members).map_err(|e| match e {
        SolutionError::Duplicate(v) => SolutionError::Duplicate(v + 1),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn write_format() {
        let s = Solution::from_members(3, [2, 0]).unwrap();
        assert_eq!(write_solution(&s), "2\n1\n3\n");
        assert_eq!(write_solution(&Solution::new(3)), "0\n");
        let s = Solution::from_members(5, [4]).unwrap();
        assert_eq!(write_solution(&s), "1\n5\n");
    }

    #[test]
    fn insertion_order_survives_removal() {
        let mut s = Solution::from_members(6, [5, 1, 3, 0]).unwrap();
        assert!(s.remove(1));
        assert!(!s.remove(1));
        assert_eq!(s.members(), &[5, 3, 0]);
        s.retain(|v| v != 3);
        assert_eq!(s.members(), &[5, 0]);
        assert!(!s.contains(3));
        assert!(s.contains(5));
        assert!(!s.insert(0));
        assert!(s.insert(3));
        assert_eq!(s.members(), &[5, 0, 3]);
    }

    #[test]
    fn from_members_rejects_bad_input() {
        assert_eq!(
            Solution::from_members(2, [2]),
            Err(SolutionError::OutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Solution::from_members(3, [1, 1]), Err(SolutionError::Duplicate(1)));
    }

    #[test]
    fn parse_round_trip() {
        let s = Solution::from_members(7, [6, 2, 3]).unwrap();
        let parsed = parse_solution(&write_solution(&s), 7).unwrap();
        assert_eq!(parsed.sorted_members(), s.sorted_members());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_solution("1\n9\n", 3),
            Err(SolutionError::OutOfRange { vertex: 9, n: 3 })
        ));
        assert!(matches!(
            parse_solution("2\n1\n", 3),
            Err(SolutionError::Malformed { .. })
        ));
        assert!(matches!(parse_solution("2\n1\n1\n", 3), Err(SolutionError::Duplicate(1))));
        assert!(matches!(parse_solution("", 3), Err(SolutionError::Malformed { line: 1, .. })));
        assert!(matches!(
            parse_solution("1\nx\n", 3),
            Err(SolutionError::Malformed { line: 2, .. })
        ));
    }
}
