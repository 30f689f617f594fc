//! Graph file formats: graph6, DIMACS coloring, and plain edge lists.

use crate::graph::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses one graph6-encoded graph from a single ASCII line.
/// The optional `>>graph6<<` header prefix is skipped.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedEncoding("empty line".into()));
    }
    let (n, mut pos) = decode_n(bytes)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(GraphError::MalformedEncoding(format!(
            "expected {} edge bytes for n={}, got {}",
            bytes_needed,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    for col in 1..n {
        for row in 0..col {
            if bit.is_multiple_of(6) {
                cur = decode_byte(bytes[pos])?;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph in graph6 format (no header).
pub fn to_graph6(g: &Graph) -> String {
    let mut out = encode_n(g.n());
    let n = g.n();
    let mut cur = 0u8;
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            cur <<= 1;
            if g.has_edge(row, col) {
                cur |= 1;
            }
            bit += 1;
            if bit.is_multiple_of(6) {
                out.push((cur + 63) as char);
                cur = 0;
            }
        }
    }
    if !bit.is_multiple_of(6) {
        cur <<= 6 - bit % 6;
        out.push((cur + 63) as char);
    }
    out
}

fn decode_byte(b: u8) -> Result<u8, GraphError> {
    if !(63..=126).contains(&b) {
        return Err(GraphError::MalformedEncoding(format!(
            "byte {b} outside graph6 range 63..=126"
        )));
    }
    Ok(b - 63)
}

fn decode_n(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    if bytes[0] != 126 {
        return Ok((decode_byte(bytes[0])? as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(GraphError::MalformedEncoding("truncated 36-bit size".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | decode_byte(b)? as usize;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(GraphError::MalformedEncoding("truncated 18-bit size".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | decode_byte(b)? as usize;
        }
        Ok((n, 4))
    }
}

fn encode_n(n: usize) -> String {
    if n <= 62 {
        ((n as u8 + 63) as char).to_string()
    } else if n <= 258047 {
        let mut s = String::from("~");
        for shift in [12, 6, 0] {
            s.push(((n >> shift & 63) as u8 + 63) as char);
        }
        s
    } else {
        let mut s = String::from("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            s.push(((n >> shift & 63) as u8 + 63) as char);
        }
        s
    }
}

/// Parses a DIMACS coloring instance: `p edge N M` then `e u v` lines
/// with 1-indexed endpoints. Comment lines `c ...` are skipped.
pub fn from_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", ns, _m] | ["p", "edges", ns, _m] | ["p", "col", ns, _m] => {
                n = Some(ns.parse().map_err(|_| {
                    GraphError::MalformedEncoding(format!("line {}: bad vertex count", lineno + 1))
                })?);
            }
            ["e", us, vs] => {
                let u: usize = us.parse().map_err(|_| {
                    GraphError::MalformedEncoding(format!("line {}: bad endpoint", lineno + 1))
                })?;
                let v: usize = vs.parse().map_err(|_| {
                    GraphError::MalformedEncoding(format!("line {}: bad endpoint", lineno + 1))
                })?;
                if u == 0 || v == 0 {
                    return Err(GraphError::MalformedEncoding(format!(
                        "line {}: DIMACS vertices are 1-indexed",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(GraphError::MalformedEncoding(format!(
                    "line {}: unrecognized DIMACS line",
                    lineno + 1
                )))
            }
        }
    }
    let n = n.ok_or_else(|| GraphError::MalformedEncoding("missing p line".into()))?;
    Graph::from_edge_list(n, &edges)
}

/// Parses a plain edge-list file: first line `N`, then one `u v` pair per
/// line with 0-indexed endpoints.
pub fn from_edges_text(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, first) = lines
        .next()
        .ok_or_else(|| GraphError::MalformedEncoding("empty edge-list file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| GraphError::MalformedEncoding("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let (Some(us), Some(vs), None) = (it.next(), it.next(), it.next()) else {
            return Err(GraphError::MalformedEncoding(format!(
                "line {}: expected 'u v'",
                lineno + 1
            )));
        };
        let u: usize = us.parse().map_err(|_| {
            GraphError::MalformedEncoding(format!("line {}: bad endpoint", lineno + 1))
        })?;
        let v: usize = vs.parse().map_err(|_| {
            GraphError::MalformedEncoding(format!("line {}: bad endpoint", lineno + 1))
        })?;
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the plain edge-list format accepted by [`from_edges_text`].
pub fn to_edges_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
