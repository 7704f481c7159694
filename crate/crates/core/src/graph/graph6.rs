//! graph6 encoding: the ASCII format used by nauty/geng for graph corpora.
//!
//! Vertex count as `n+63` for n <= 62, or `126` followed by three 6-bit
//! digits for 63 <= n <= 258047. Then the upper triangle, column-major
//! (bit (i,j) with i < j at position j(j-1)/2 + i), packed MSB-first in
//! 6-bit groups, each offset by 63.

use super::Graph;
use crate::error::{Error, Result};

/// Encode a graph as a graph6 line (no trailing newline, no header).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        // 36-bit form; unreachable for this crate's graph sizes
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse one graph6 line. Accepts an optional `>>graph6<<` header.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    let mut pos = 0usize;
    let n: usize = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Error::Graph6("truncated 36-bit vertex count".into()));
            }
            pos = 8;
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | decode_byte(b)?;
            }
            n
        } else {
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated 18-bit vertex count".into()));
            }
            pos = 4;
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | decode_byte(b)?;
            }
            n
        }
    } else {
        pos = 1;
        decode_byte(bytes[0])?
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Graph6(format!(
            "expected {} edge bytes for n={}, found {}",
            nbytes,
            n,
            bytes.len() - pos
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for &b in &bytes[pos..] {
        let v = decode_byte(b)?;
        for k in (0..6).rev() {
            if bit >= nbits {
                break;
            }
            if v >> k & 1 == 1 {
                let (i, j) = pair_from_index(bit);
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

fn decode_byte(b: u8) -> Result<usize> {
    if !(63..=126).contains(&b) {
        return Err(Error::Graph6(format!("byte {b} out of graph6 range")));
    }
    Ok((b - 63) as usize)
}

/// Inverse of `bit index = j(j-1)/2 + i` for the column-major upper triangle.
fn pair_from_index(idx: usize) -> (usize, usize) {
    let mut j = 1usize;
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}
