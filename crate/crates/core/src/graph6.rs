//! graph6 reader and writer.
//!
//! Each byte carries six bits offset by 63. The order comes first (one byte
//! for `n ≤ 62`, otherwise `126` followed by three bytes), then the upper
//! triangle column by column: `x(0,1), x(0,2), x(1,2), x(0,3), …`.

use crate::error::GraphError;
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn sextet(byte: u8) -> Result<u8, GraphError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(GraphError::Graph6(format!("byte {byte} outside 63..=126")))
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix is skipped.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\r', '\n']);
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(GraphError::Graph6("empty line".into()));
    };
    let (n, body) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(GraphError::Graph6(
                "orders above 258047 are unsupported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated order field".into()));
        }
        let n = bytes[1..4].iter().try_fold(0usize, |acc, &b| {
            Ok::<_, GraphError>((acc << 6) | sextet(b)? as usize)
        })?;
        (n, &bytes[4..])
    } else {
        (sextet(first)? as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge {
            n,
            limit: MAX_ORDER,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::Graph6(format!(
            "expected {needed} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(body[k / 6])?;
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses every graph in a graph6 file, skipping blank lines and bare headers.
pub fn read_graph6(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(parse_graph6)
        .collect()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
