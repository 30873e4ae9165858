//! Reader and writer for the PACE `.ds` graph format.
//!
//! ```text
//! c optional comment
//! p ds <n> <m>
//! <u> <v>        (m lines, 1-indexed endpoints)
//! ```
//!
//! Comment lines (first token starting with `c`) and blank lines may appear
//! anywhere. The edge list must contain exactly `m` lines; self-loops and
//! duplicates count towards `m` but are dropped from the graph.

use std::io::{self, Read};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; one past the last line for end-of-input errors.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing `p ds <n> <m>` header")]
    MissingHeader,
    #[error("malformed header, expected `p ds <n> <m>`")]
    MalformedHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge line before header")]
    EdgeBeforeHeader,
    #[error("edge line must contain exactly two vertex ids")]
    MalformedEdge,
    #[error("non-numeric token `{0}`")]
    NonNumeric(String),
    #[error("vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { id: u64, n: usize },
    #[error("expected {declared} edge lines, found {found}")]
    TooFewEdges { declared: usize, found: usize },
    #[error("more than the {declared} declared edge lines")]
    TooManyEdges { declared: usize },
}

/// Failure reading a `.ds` stream.
#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn parse_number(token: &str, line: usize) -> Result<u64, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::NonNumeric(token.to_owned()),
    })
}

/// Parses `.ds` bytes into a [`Graph`].
pub fn parse_ds(input: &[u8]) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut line_no = 0;

    let mut lines = input.split(|&b| b == b'\n').peekable();
    while let Some(raw) = lines.next() {
        // `split` yields an empty slice after a trailing newline.
        if raw.is_empty() && lines.peek().is_none() {
            break;
        }
        line_no += 1;
        let err = |kind| ParseError { line: line_no, kind };
        let text = std::str::from_utf8(raw).map_err(|_| err(ParseErrorKind::InvalidUtf8))?;
        let mut tokens = text.split_ascii_whitespace();
        let Some(first) = tokens.next() else {
            continue;
        };
        if first.starts_with('c') {
            continue;
        }
        if first == "p" {
            if header.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            let rest: Vec<&str> = tokens.collect();
            if rest.len() != 3 || rest[0] != "ds" {
                return Err(err(ParseErrorKind::MalformedHeader));
            }
            let n = parse_number(rest[1], line_no)? as usize;
            let m = parse_number(rest[2], line_no)? as usize;
            if n == 0 {
                return Err(err(ParseErrorKind::NoVertices));
            }
            if n > Vertex::MAX as usize {
                return Err(err(ParseErrorKind::MalformedHeader));
            }
            edges.reserve(m);
            header = Some((n, m));
            continue;
        }

        let Some((n, m)) = header else {
            return Err(err(ParseErrorKind::EdgeBeforeHeader));
        };
        let second = tokens.next().ok_or_else(|| err(ParseErrorKind::MalformedEdge))?;
        if tokens.next().is_some() {
            return Err(err(ParseErrorKind::MalformedEdge));
        }
        if edges.len() == m {
            return Err(err(ParseErrorKind::TooManyEdges { declared: m }));
        }
        let endpoint = |token: &str| -> Result<Vertex, ParseError> {
            let id = parse_number(token, line_no)?;
            if id == 0 || id > n as u64 {
                return Err(err(ParseErrorKind::VertexOutOfRange { id, n }));
            }
            Ok((id - 1) as Vertex)
        };
        let u = endpoint(first)?;
        let v = endpoint(second)?;
        edges.push((u, v));
    }

    let eof = ParseError {
        line: line_no + 1,
        kind: ParseErrorKind::MissingHeader,
    };
    let (n, m) = header.ok_or(eof.clone())?;
    if edges.len() < m {
        return Err(ParseError {
            kind: ParseErrorKind::TooFewEdges {
                declared: m,
                found: edges.len(),
            },
            ..eof
        });
    }
    Ok(Graph::from_edges(n, edges))
}

/// Reads a whole stream and parses it.
pub fn read_ds<R: Read>(mut reader: R) -> Result<Graph, ReadError> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf)?;
    Ok(parse_ds(&buf)?)
}

/// Serializes a graph in `.ds` format with edges in lexicographic order.
///
/// `parse_ds(write_ds(g)) == g` for every graph.
pub fn write_ds(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 14 * g.m());
    writeln!(out, "p ds {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}
