//! graph6 encoding (header-free, as written by nauty's `showg`/`geng`).

use super::SmallGraph;
use crate::error::{Error, Result};
use crate::limits::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6. Adjacency bits are taken column by column from
/// the upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), …
pub fn to_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    // n <= 32 always fits the single-byte size field.
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes a single graph6 string. A leading `>>graph6<<` header and a
/// trailing newline are tolerated.
pub fn from_graph6(text: &str) -> Result<SmallGraph> {
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let body = body.strip_suffix('\n').unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte 0x{b:02x} outside graph6 range"),
            ));
        }
    }
    let (n, data_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else if bytes.len() >= 8 {
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        return Err(Error::parse(base, "truncated graph6 size field"));
    };
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "graph6 vertex count",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = data_start + nbits.div_ceil(6);
    if bytes.len() != expected {
        let at = base + bytes.len().min(expected);
        return Err(Error::parse(
            at,
            format!("expected {expected} bytes for n={n}, found {}", bytes.len()),
        ));
    }
    let mut g = SmallGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[data_start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::parse(base + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle_graph};

    #[test]
    fn base_cases() {
        assert_eq!(to_graph6(&SmallGraph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&SmallGraph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&complete_graph(2).unwrap()), "A_");
        assert_eq!(to_graph6(&SmallGraph::empty(2).unwrap()), "A?");
    }

    #[test]
    fn known_strings() {
        // Matches the 5-vertex example in petgraph's graph6 tests: edges
        // A-C, A-E, B-D, D-E.
        let g = SmallGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&complete_graph(4).unwrap()), "C~");
        assert_eq!(to_graph6(&cycle_graph(5).unwrap()), "Dhc");
    }

    #[test]
    fn decode_known() {
        assert_eq!(from_graph6("A_").unwrap(), complete_graph(2).unwrap());
        assert_eq!(
            from_graph6(">>graph6<<C~\n").unwrap(),
            complete_graph(4).unwrap()
        );
        let k32 = complete_graph(32).unwrap();
        assert_eq!(from_graph6(&to_graph6(&k32)).unwrap(), k32);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert!(matches!(
            from_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            from_graph6("C~ "),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            from_graph6("C"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("C~~"),
            Err(Error::Parse { offset: 2, .. })
        ));
        // 2 vertices, padding bit set.
        assert!(matches!(
            from_graph6("A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("~?@?"),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
