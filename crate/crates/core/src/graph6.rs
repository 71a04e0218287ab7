//! graph6 encoding (header-less, as produced by nauty's `geng`).
//!
//! The order `n` comes first (one byte `n + 63` for `n <= 62`, otherwise
//! `~` followed by three 6-bit groups), then the upper triangle of the
//! adjacency matrix column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`)
//! packed into 6-bit groups, each offset by 63. Padding bits must be zero.

use crate::error::{Result, TrdError};
use crate::graph::{bit, Graph, Mask, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> TrdError {
    TrdError::Parse {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b @ 63..=126) => Ok(b - 63),
        Some(&b) => Err(parse_err(
            offset,
            format!("byte 0x{b:02x} is outside the graph6 range 63..=126"),
        )),
        None => Err(parse_err(offset, "unexpected end of input")),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let skipped = text.len() - body.len();
    let bytes = body.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(skipped, "empty graph6 string"));
    }
    for i in 0..bytes.len() {
        sextet(bytes, i).map_err(|e| shift(e, skipped))?;
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(|e| shift(e, skipped))? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, skipped))? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, skipped))? as usize;
        }
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(TrdError::Size {
            what: "graph6 input",
            order: n,
            limit: MAX_ORDER,
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            skipped + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for a graph of order {n}, found {}",
                bytes.len()
            ),
        ));
    }

    let mut adj: Vec<Mask> = vec![0; n];
    let mut k = 0usize;
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                chunk = sextet(bytes, pos).map_err(|e| shift(e, skipped))?;
                pos += 1;
            }
            if chunk & (0b10_0000 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if chunk & pad_mask != 0 {
            return Err(parse_err(skipped + pos - 1, "non-zero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

fn shift(e: TrdError, by: usize) -> TrdError {
    match e {
        TrdError::Parse { offset, message } => TrdError::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Encodes a graph in graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut k = 0usize;
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                chunk |= 0b10_0000 >> (k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
