//! Edge-list text and graph6 interchange formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! Lines whose first non-blank character is `#` and blank lines are skipped.

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    IdOutOfRange {
        line: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph6: bad length (expected {expected} bytes, found {found})")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: byte {byte} at offset {offset} outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::Malformed {
        line: 0,
        reason: "missing header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::IdOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| ParseError::Malformed {
            line,
            reason: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(ParseError::Malformed {
            line,
            reason: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_SMALL_MAX: usize = 62;
const G6_MEDIUM_MAX: usize = 258_047;

fn graph6_size_field(n: usize) -> Vec<u8> {
    if n <= G6_SMALL_MAX {
        vec![n as u8 + 63]
    } else if n <= G6_MEDIUM_MAX {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    }
}

/// graph6 encoding without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = graph6_size_field(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Parses one graph6 record. Surrounding ASCII whitespace is ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, ParseError> {
    let bytes = bytes.trim_ascii();
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(ParseError::Graph6Byte { offset, byte });
    }
    let take = |from: usize, count: usize| -> Result<usize, ParseError> {
        if bytes.len() < from + count {
            return Err(ParseError::Graph6Length {
                expected: from + count,
                found: bytes.len(),
            });
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, header) = match bytes.first() {
        None => {
            return Err(ParseError::Graph6Length {
                expected: 1,
                found: 0,
            })
        }
        Some(126) if bytes.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(126) => (take(1, 3)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(ParseError::Graph6Length {
            expected,
            found: bytes.len(),
        });
    }
    let body = &bytes[header..];
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 cannot encode loops or duplicates"))
}
