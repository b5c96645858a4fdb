//! graph6 short form (`n ≤ 62`): one size byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), …`, packed six bits per byte, most significant bit first, each
//! byte offset by 63. Unused trailing bits must be zero.

use thiserror::Error;

use super::Graph;
use crate::{Error, Result};

pub const GRAPH6_MAX_N: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("long-form size prefix (n > 62) is not supported")]
    LongForm,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    InvalidByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
}

fn fail(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6(Graph6Error { offset, kind })
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    parse_graph6_bytes(line.as_bytes())
}

pub fn parse_graph6_bytes(line: &[u8]) -> Result<Graph> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let start = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &line[start..];

    let Some(&size) = body.first() else {
        return Err(fail(start, Graph6ErrorKind::Empty));
    };
    if size == 126 {
        return Err(fail(start, Graph6ErrorKind::LongForm));
    }
    if !(63..=126).contains(&size) {
        return Err(fail(start, Graph6ErrorKind::InvalidByte(size)));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[1..];
    if let Some(i) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(fail(start + 1 + i, Graph6ErrorKind::InvalidByte(data[i])));
    }
    if data.len() != expected {
        let offset = start + 1 + data.len().min(expected);
        return Err(fail(
            offset,
            Graph6ErrorKind::Length {
                expected,
                found: data.len(),
            },
        ));
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(fail(start + expected, Graph6ErrorKind::Padding));
        }
    }
    Ok(g)
}

/// Encodes `g` without header or newline.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().into_iter().map(|e| (e.u, e.v)).collect()
    }

    // Reference decodings produced by networkx's graph6 reader.
    #[test]
    fn decodes_reference_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(edges(&g), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);

        let g = parse_graph6("FhCKG").unwrap();
        assert_eq!(
            edges(&g),
            vec![(0, 1), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
        );

        let g = parse_graph6("E?~o").unwrap();
        assert_eq!(g.size(), 8);
        assert!(g.has_edge(3, 5) && !g.has_edge(4, 5));
    }

    #[test]
    fn k1_and_k4() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.size(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    // Reference encodings produced by networkx's graph6 writer.
    #[test]
    fn encodes_reference_strings() {
        assert_eq!(emit_graph6(&complete(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&complete(5)).unwrap(), "D~{");
        assert_eq!(emit_graph6(&cycle(4)).unwrap(), "Cl");
        assert_eq!(emit_graph6(&path(4)).unwrap(), "Ch");
        assert_eq!(emit_graph6(&star(3)).unwrap(), "Cs");
        assert_eq!(emit_graph6(&cycle(6)).unwrap(), "EhEG");
        assert_eq!(emit_graph6(&Graph::new(0)).unwrap(), "?");
        let d = parse_graph6("D?{").unwrap();
        assert_eq!(emit_graph6(&d).unwrap(), "D?{");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Cl\n").unwrap(), cycle(4));
        assert_eq!(parse_graph6("Cl\r\n").unwrap(), cycle(4));
    }

    fn err(s: &str) -> Graph6Error {
        match parse_graph6(s) {
            Err(Error::Graph6(e)) => e,
            other => panic!("expected graph6 error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(err("").kind, Graph6ErrorKind::Empty);
        assert_eq!(err("~??").kind, Graph6ErrorKind::LongForm);
        assert_eq!(err(" ").kind, Graph6ErrorKind::InvalidByte(b' '));
        let e = err("C~~");
        assert_eq!(e.offset, 2);
        assert_eq!(
            e.kind,
            Graph6ErrorKind::Length {
                expected: 1,
                found: 2
            }
        );
        let e = err("D?");
        assert_eq!(
            e.kind,
            Graph6ErrorKind::Length {
                expected: 2,
                found: 1
            }
        );
        // K4 uses 6 bits exactly; C with '~' is fine but D?| sets a padding bit.
        let e = err("D?|");
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::Padding));
        let e = err("C\x7f");
        assert_eq!((e.offset, e.kind), (1, Graph6ErrorKind::InvalidByte(0x7f)));
    }

    #[test]
    fn oversize_emit_is_rejected() {
        assert_eq!(
            emit_graph6(&Graph::new(63)),
            Err(Error::UnsupportedSize { n: 63, max: 62 })
        );
        assert!(emit_graph6(&Graph::new(62)).is_ok());
    }

    #[test]
    fn emit_is_repeatable() {
        let g = complete(7);
        assert_eq!(emit_graph6(&g).unwrap(), emit_graph6(&g).unwrap());
    }
}
