//! graph6 encoding and decoding.
//!
//! Size header `N(n)`: one byte `63 + n` for `n <= 62`; `126` followed by
//! three 6-bit groups for `n <= 258047`; `126 126` followed by six 6-bit
//! groups up to `2^36 - 1`. The body lists the upper triangle column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, big
//! endian, each byte offset by 63 and the last one zero-padded.
//!
//! Decoding is strict so that `encode(decode(s)) == s`: non-minimal headers,
//! nonzero padding bits, truncated bodies and trailing bytes are all errors.

use super::{Graph, GraphError};

/// Largest vertex count [`Graph::from_graph6`] will materialize. Headers
/// beyond this still parse through [`graph6_header`].
pub const MAX_DECODE_VERTICES: usize = 1 << 15;

const SMALL_MAX: u64 = 62;
const MEDIUM_MAX: u64 = 258_047;
const LARGE_MAX: u64 = (1 << 36) - 1;

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

fn push_groups(out: &mut Vec<u8>, n: u64, groups: u32) {
    for g in (0..groups).rev() {
        out.push(63 + ((n >> (6 * g)) & 0x3f) as u8);
    }
}

fn encode_header(n: u64, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(63 + n as u8);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push_groups(out, n, 3);
    } else {
        assert!(n <= LARGE_MAX, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        push_groups(out, n, 6);
    }
}

fn read_groups(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | u64::from(b - 63))
}

/// Parses the size header, returning the vertex count and header length.
pub fn graph6_header(text: &str) -> Result<(usize, usize), GraphError> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("byte {} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let (n, len, min) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte header"));
            }
            (read_groups(&rest[..6]), 8, MEDIUM_MAX + 1)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte header"));
            }
            (read_groups(&rest[..3]), 4, SMALL_MAX + 1)
        }
        [b, ..] => (u64::from(b - 63), 1, 0),
    };
    if n < min {
        return Err(malformed(format!("non-minimal header for n = {n}")));
    }
    Ok((n as usize, len))
}

impl Graph {
    /// Canonical graph6 string, without a trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::new();
        encode_header(n as u64, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
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
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }

    /// Decodes one graph6 line. A single trailing `\n` (or `\r\n`) is allowed.
    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        let line = text
            .strip_suffix('\n')
            .map(|t| t.strip_suffix('\r').unwrap_or(t))
            .unwrap_or(text);
        let (n, header_len) = graph6_header(line)?;
        if n > MAX_DECODE_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let body = &line.as_bytes()[header_len..];
        let nbits = n * n.saturating_sub(1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() < expected {
            return Err(malformed(format!(
                "truncated body: {} bytes, expected {expected}",
                body.len()
            )));
        }
        if body.len() > expected {
            return Err(malformed(format!(
                "trailing garbage: {} bytes after the adjacency data",
                body.len() - expected
            )));
        }
        let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        let pad = expected * 6 - nbits;
        if pad > 0 && (body[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_examples() {
        let k3 = Graph::from_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(Graph::from_graph6("@").unwrap().order(), 1);
        let edge = Graph::from_graph6("A_\n").unwrap();
        assert_eq!((edge.order(), edge.edge_count()), (2, 1));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(Graph::complete(3).to_graph6(), "Bw");
        assert_eq!(Graph::empty(1).to_graph6(), "@");
        let p = Graph::petersen();
        let s = p.to_graph6();
        assert_eq!(s.as_bytes()[0], 63 + 10);
        assert_eq!(Graph::from_graph6(&s).unwrap(), p);
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "B", "Bww", "Bx", "B\u{1}", "~??@", "A`", "~~??????"] {
            assert!(
                matches!(Graph::from_graph6(bad), Err(GraphError::MalformedGraph6(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn extended_headers() {
        let g = Graph::cycle(63);
        let s = g.to_graph6();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);

        let mut million = Vec::new();
        encode_header(1_000_000, &mut million);
        assert_eq!(million.len(), 8);
        let text = String::from_utf8(million).unwrap();
        assert_eq!(graph6_header(&text), Ok((1_000_000, 8)));
        assert_eq!(Graph::from_graph6(&text), Err(GraphError::TooLarge(1_000_000)));

        let mut medium = Vec::new();
        encode_header(258_047, &mut medium);
        assert_eq!(graph6_header(std::str::from_utf8(&medium).unwrap()), Ok((258_047, 4)));
    }
}
