//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use mhc_core::graph::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    BadHeader,
    #[error("order {n} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge { n: usize },
    #[error("order 0 graphs are not supported")]
    ZeroOrder,
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sixes(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::BadByte { offset: offset + i, byte: b })
            }
        })
        .collect()
}

/// Parses one graph6 line. A leading `>>graph6<<` and trailing whitespace
/// are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    let (n, body, body_offset) = if first == 126 {
        if rest.first() == Some(&126) {
            // 6-byte form, only for n ≥ 258048
            return Err(Graph6Error::TooLarge { n: 258048 });
        }
        if rest.len() < 3 {
            return Err(Graph6Error::BadHeader);
        }
        let digits = sixes(&rest[..3], 1)?;
        let n = digits.iter().fold(0usize, |acc, &d| acc << 6 | usize::from(d));
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &rest[3..], 4)
    } else {
        let n = usize::from(sixes(&[first], 0)?[0]);
        (n, rest, 1)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge { n });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let data = sixes(body, body_offset)?;
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(&rows)?)
}

/// Encodes a graph as a graph6 line (without newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|d| d as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
