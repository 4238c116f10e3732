//! graph6 and plain edge-list text formats.
//!
//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, each
//! byte offset by 63. Orders up to 62 use one header byte; 63 and above use
//! `~` followed by three bytes.

use super::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        offset,
        message: message.into(),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(base, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(base + 1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(parse_err(base + bytes.len(), "truncated order header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(GraphError::Size { order: n, cap: MAX_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < needed {
        return Err(parse_err(base + bytes.len(), format!("truncated: expected {needed} edge bytes, found {}", body.len())));
    }
    if body.len() > needed {
        return Err(parse_err(base + pos + needed, "trailing bytes after edge field"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(parse_err(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// `"n m"` on the first line, then one `"u v"` line per edge.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    // Offsets are byte positions of the offending line.
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.trim();
        if !content.is_empty() && !content.starts_with('#') {
            lines.push((offset, content));
        }
        offset += line.len();
    }
    let mut iter = lines.into_iter();
    let (off, header) = iter.next().ok_or_else(|| parse_err(0, "missing header line"))?;
    let nums = parse_pair(header, off)?;
    let (n, m) = (nums.0, nums.1);
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Size { order: n, cap: MAX_ORDER });
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (off, line) in iter {
        let (u, v) = parse_pair(line, off)?;
        if g.has_edge(u, v) {
            return Err(parse_err(off, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(off, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(text.len(), format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_pair(line: &str, offset: usize) -> Result<(usize, usize), GraphError> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        parts
            .next()
            .ok_or_else(|| parse_err(offset, format!("expected two integers in {line:?}")))?
            .parse()
            .map_err(|_| parse_err(offset, format!("invalid integer in {line:?}")))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(parse_err(offset, format!("extra fields in {line:?}")));
    }
    Ok(pair)
}
