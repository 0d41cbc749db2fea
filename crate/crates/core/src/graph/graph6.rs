//! The graph6 text encoding.
//!
//! A graph6 string is the order `n` (one byte `63 + n` for `n <= 62`, or `~`
//! followed by three 6-bit bytes for larger orders) and then the upper
//! triangle of the adjacency matrix in column order, `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed six bits per byte, most significant first, offset by 63.

use thiserror::Error;

use super::{bit, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at position {position}")]
    BadCharacter { position: usize, byte: u8 },
    #[error("graph6 string has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("graph6 order {0} exceeds the limit of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("nonzero padding bits in final graph6 byte")]
    Padding,
}

pub fn encode_graph6(g: &Graph) -> String {
    String::from_utf8(encode_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + pairs.div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbours(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let value = |position: usize| -> Result<u8, Graph6Error> {
        match bytes.get(position) {
            Some(&byte) if (63..=126).contains(&byte) => Ok(byte - 63),
            Some(&byte) => Err(Graph6Error::BadCharacter { position, byte }),
            None => Err(Graph6Error::Length { expected: position + 1, found: bytes.len() }),
        }
    };
    let (n, start) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            // Eight-byte form, orders of 258048 and above.
            return Err(Graph6Error::OrderTooLarge(258_048));
        }
        let n = (1..4).try_fold(0usize, |acc, p| Ok::<_, Graph6Error>((acc << 6) | value(p)? as usize))?;
        (n, 4)
    } else {
        (value(0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = start + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::Length { expected, found: bytes.len() });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(start + k / 6)?;
            if byte & (1 << (5 - k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = value(start + k / 6)?;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    for p in start..expected {
        value(p)?;
    }
    Ok(Graph::from_rows_unchecked(rows))
}
