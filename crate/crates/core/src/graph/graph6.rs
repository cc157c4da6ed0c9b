//! The graph6 text encoding (no `>>graph6<<` header).
//!
//! Layout: a size field `N(n)` followed by the bits `x(i,j)` for
//! `0 <= i < j < n`, ordered by `j` then `i`, packed big-endian into 6-bit
//! groups, zero-padded, each group offset by 63.

use thiserror::Error;

use super::{Graph, GraphBuilder, GraphError};

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size field: {0}")]
    MalformedLength(&'static str),
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the adjacency data")]
    TrailingData { extra: usize },
    #[error("nonzero bits in the final padding")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        assert!(n <= MAX_LONG, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let group = |b: &[u8]| b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - BIAS) as usize);
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedLength("8-byte size field is truncated"));
            }
            let n = group(&rest[..6]);
            if n <= MAX_MEDIUM {
                return Err(Graph6Error::MalformedLength("8-byte size field used for a small graph"));
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedLength("4-byte size field is truncated"));
            }
            let n = group(&rest[..3]);
            if n <= MAX_SHORT {
                return Err(Graph6Error::MalformedLength("4-byte size field used for a small graph"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Serializes `g` in canonical graph6 form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + data_len(n));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 string. A single trailing line terminator is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(BIAS..=126).contains(*b)) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    let (n, header) = decode_size(bytes)?;
    let data = &bytes[header..];
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { extra: data.len() - expected });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 && (data[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}
