//! Short-form graph6 codec (orders 1..=62).
//!
//! The first byte is `63 + n`. The upper triangle of the adjacency matrix is
//! then read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian into 6-bit groups, each stored as `group + 63`. The last group
//! is zero-padded.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string. Surrounding ASCII whitespace is ignored.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_ascii().as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::G6Empty);
    };
    if !(BIAS..=126).contains(&head) {
        return Err(Error::G6InvalidByte {
            offset: 0,
            byte: head,
        });
    }
    if head == 126 {
        return Err(Error::G6LongForm { offset: 0 });
    }
    let n = (head - BIAS) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Error::G6Length {
            offset: bytes.len().min(expected),
            expected,
            found: bytes.len(),
        });
    }
    let mut rows: Vec<u64> = alloc::vec![0; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = 1 + k / 6;
            let byte = bytes[offset];
            if !(BIAS..=126).contains(&byte) {
                return Err(Error::G6InvalidByte { offset, byte });
            }
            if (byte - BIAS) >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    // Padding-only bytes are not touched by the loop above.
    for (offset, &byte) in bytes.iter().enumerate().skip(1) {
        if !(BIAS..=126).contains(&byte) {
            return Err(Error::G6InvalidByte { offset, byte });
        }
    }
    Graph::from_rows(rows)
}

/// Encodes a graph of order at most 62.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > SHORT_MAX {
        return Err(Error::G6Unsupported(n));
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((BIAS + n as u8) as char);
    let mut group = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push((group + BIAS) as char);
                group = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        group <<= 6 - k % 6;
        out.push((group + BIAS) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use proptest::prelude::*;

    #[test]
    fn decodes_k4() {
        assert_eq!(decode("C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn decodes_empty_five() {
        let g = decode("D??").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn decodes_c4() {
        let g = decode("Cl").unwrap();
        let edges: Vec<Edge> = g.edges().collect();
        let expected: Vec<Edge> = [(0, 1), (0, 3), (1, 2), (2, 3)]
            .iter()
            .map(|&(a, b)| Edge::new(a, b).unwrap())
            .collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn encodes_examples() {
        assert_eq!(encode(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode(&Graph::empty(5).unwrap()).unwrap(), "D??");
        assert_eq!(encode(&Graph::cycle(4).unwrap()).unwrap(), "Cl");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn tolerates_trailing_newline() {
        assert_eq!(decode("C~\n").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(decode("C~\r\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(decode(""), Err(Error::G6Empty));
        assert_eq!(decode("?"), Err(Error::EmptyGraph));
        assert_eq!(
            decode("C"),
            Err(Error::G6Length {
                offset: 1,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            decode("C~~"),
            Err(Error::G6Length {
                offset: 2,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            decode("D?!"),
            Err(Error::G6InvalidByte {
                offset: 2,
                byte: 0x21
            })
        );
        assert_eq!(
            decode("\x7f"),
            Err(Error::G6InvalidByte {
                offset: 0,
                byte: 0x7f
            })
        );
        assert_eq!(decode("~?@A"), Err(Error::G6LongForm { offset: 0 }));
    }

    #[test]
    fn rejects_large_encode() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(encode(&g), Err(Error::G6Unsupported(63)));
        assert!(encode(&Graph::empty(62).unwrap()).is_ok());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip_small(g in arb_graph(12)) {
            let text = encode(&g).unwrap();
            prop_assert_eq!(decode(&text).unwrap(), g);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn round_trip_large(g in arb_graph(62)) {
            let text = encode(&g).unwrap();
            prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&text).unwrap(), g);
        }
    }
}
