//! graph6 encoding.
//!
//! Order prefix `N(n)`: one byte `n + 63` for `n <= 62`, otherwise `126`
//! followed by three 6-bit groups (the 8-byte form is never needed below
//! [`MAX_ORDER`]). The adjacency bits follow in column-major upper-triangle
//! order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six per byte, most
//! significant first, zero padded, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Header some generators write before the first graph.
pub const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let s = line.strip_prefix(HEADER).unwrap_or(line).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {pos} ({:#04x}) outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::UnsupportedSize {
                what: "graph order",
                got: usize::MAX,
                cap: MAX_ORDER,
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(Error::Graph6("graph with no vertices".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph order",
            got: n,
            cap: MAX_ORDER,
        });
    }
    let nbits = n * (n - 1) / 2;
    let want = nbits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Graph6(format!(
            "expected {want} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[t / 6] - 63;
            if byte >> (5 - t % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            t += 1;
        }
    }
    Ok(g)
}

/// Parses a multi-line graph6 document, skipping blank lines. Errors carry
/// the 1-based line number.
pub fn decode_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(decode(line).map_err(|e| (i + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_fixed_codes() {
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::empty(5)), "D??");
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode("D??").unwrap(), Graph::empty(5));
        assert_eq!(encode(&Graph::empty(1)), "@");
        // Edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn header_and_errors() {
        assert_eq!(decode(">>graph6<<A_").unwrap(), Graph::complete(2));
        assert!(decode("").is_err());
        assert!(decode("A").is_err());
        assert!(decode("A__").is_err());
        assert!(decode("A ").is_err());
        assert!(matches!(decode("D?\u{7f}"), Err(Error::Graph6(_))));
        let err = decode_lines("A_\n\nD??\nbad!\n").unwrap_err();
        assert_eq!(err.0, 4);
    }

    #[test]
    fn long_order_prefix() {
        let g = crate::graph::make_snk(100, 2).unwrap();
        let s = encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..40, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { g.add_edge(i, j); }
                }
            }
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
