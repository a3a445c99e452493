//! Interchange formats: graph6 (short form), a plain edge list, and DOT.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order representable with the one-byte graph6 size header.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 short form supports at most {GRAPH6_MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 body has {got} bytes, expected {expected} for n = {n}")]
    BadLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::TooLarge(n));
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 record. A trailing newline is tolerated.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, FormatError> {
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let (&head, body) = bytes.split_first().ok_or(FormatError::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::BadByte { offset, byte });
        }
    }
    if head == 126 {
        // 126 introduces the long size header.
        return Err(FormatError::TooLarge(GRAPH6_MAX_N + 1));
    }
    let n = (head - 63) as usize;
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::BadLength { n, expected, got: body.len() });
    }
    if !total.is_multiple_of(6) {
        let pad = 6 - total % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let six = body[k / 6] - 63;
            if six >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// `"n m"` header line, then one `"u v"` line per edge in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: &str| FormatError::EdgeList { line, message: message.to_string() };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| err(hline, "header must be two nonnegative integers"))?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(l).ok_or_else(|| err(line, "expected \"u v\""))?;
        g.add_edge(u, v).map_err(|e| err(line, &e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(err(hline, &format!("header declares {m} edges but {seen} were listed")));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
