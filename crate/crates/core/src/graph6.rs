//! graph6 line format, short form only (orders 1..=62).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian into 6-bit groups, each group offset by 63. The last group is
//! zero-padded.

use crate::error::Graph6Error;
use crate::graph::Graph;

/// Largest order representable without the extended size prefix.
pub const MAX_GRAPH6_ORDER: usize = 62;

const BIAS: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Surrounding whitespace (including a trailing
/// newline) is ignored; offsets in errors refer to the trimmed text.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    if first == 126 {
        return Err(Graph6Error::ExtendedSize);
    }
    let n = (first - BIAS) as usize;
    if n == 0 {
        return Err(Graph6Error::UnsupportedOrder(0));
    }
    let data = &bytes[1..];
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
            offset: bytes.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { offset: 1 + expected });
    }

    let total = n * (n - 1) / 2;
    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let pad = expected * 6 - total;
    if pad > 0 {
        let last = data[expected - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
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
    let size = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    Ok(Graph::from_rows_unchecked(rows, size))
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), k4());
        assert_eq!(parse_graph6("Dhc").unwrap(), c5());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(emit_graph6(&k4()).unwrap(), "C~");
        assert_eq!(emit_graph6(&c5()).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn trailing_newline_is_ignored() {
        assert_eq!(parse_graph6("Dhc\n").unwrap(), c5());
    }

    #[test]
    fn error_paths() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("D h"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("Dh"),
            Err(Graph6Error::Truncated { expected: 2, found: 1, offset: 2 })
        );
        assert_eq!(parse_graph6("Dhcc"), Err(Graph6Error::TrailingData { offset: 3 }));
        // "Dhd" differs from "Dhc" only in a padding bit
        assert_eq!(parse_graph6("Dhd"), Err(Graph6Error::NonzeroPadding { offset: 2 }));
        assert_eq!(parse_graph6("~?@~"), Err(Graph6Error::ExtendedSize));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::UnsupportedOrder(0)));
    }

    #[test]
    fn large_orders_rejected_on_emit() {
        let g = Graph::new(63, [Edge::new(0, 62)]).unwrap();
        assert_eq!(emit_graph6(&g), Err(Graph6Error::UnsupportedOrder(63)));
        let g = Graph::new(62, [Edge::new(0, 61)]).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
    }
}
