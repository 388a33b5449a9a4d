//! graph6 and plain edge-list serialization.

use super::Graph;
use crate::error::{Error, Result};

/// Optional header that may prefix a graph6 line.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("byte {b} outside the graph6 range")));
    }
    let (n, rest) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(parse_err(1, "truncated order field"));
            }
            let n = tail[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(parse_err(1, "truncated order field"));
            }
            let n = tail[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &tail[3..])
        }
        [b, tail @ ..] => ((b - 63) as usize, tail),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(parse_err(
            1,
            format!(
                "expected {expected} adjacency bytes for order {n}, found {}",
                rest.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = rest[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(parse_err(1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// One `u v` line per edge, `u < v`, lexicographic order, trailing newline.
///
/// Isolated vertices above the largest endpoint are not representable.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses an edge list; the order is one more than the largest label.
/// Blank lines are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            parts
                .next()
                .ok_or_else(|| parse_err(idx + 1, format!("missing {what} endpoint")))?
                .parse::<usize>()
                .map_err(|e| parse_err(idx + 1, e.to_string()))
        };
        let u = next("first")?;
        let v = next("second")?;
        if parts.next().is_some() {
            return Err(parse_err(idx + 1, "expected exactly two integers"));
        }
        if u == v {
            return Err(parse_err(idx + 1, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut g = Graph::new(n);
    for (line, &(u, v)) in edges.iter().enumerate() {
        if g.has_edge(u, v) {
            return Err(parse_err(line + 1, format!("duplicate edge {u}-{v}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Parses either format: graph6 if the first non-blank line looks like one,
/// edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if !l.contains(char::is_whitespace) => from_graph6(l),
        _ => from_edge_list(text),
    }
}
