//! graph6 encoding: printable bytes offset by 63, six bits per byte, upper
//! triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), big-endian
//! within each byte, zero-padded to a multiple of six bits.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    // n <= 64 always fits the one-byte header (n <= 62) or the 4-byte form.
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + BIAS);
        out.push(((n >> 6) & 63) as u8 + BIAS);
        out.push((n & 63) as u8 + BIAS);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size header".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("8-byte size header exceeds 64 vertices".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 62 {
            return Err(Error::Graph6(format!("non-minimal size header for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n == 0 || n > super::MAX_N {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
