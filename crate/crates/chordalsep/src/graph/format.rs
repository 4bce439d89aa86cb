//! Text formats: graph6 (single-byte size field, up to 62 vertices) and a
//! plain edge-list format with one `u v` pair per line.

use thiserror::Error;

use super::{Graph, GraphError, MAX_GRAPH6_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("byte {offset}: size field encodes a graph with more than 62 vertices")]
    UnsupportedSize { offset: usize },
    #[error("truncated payload: expected {expected} bytes after the size byte, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("byte {offset}: trailing data after the bit payload")]
    TrailingData { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
    #[error("empty graph6 string")]
    Empty,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("input contains no graph")]
    NoGraph,
}

/// Parses a graph6-encoded graph with `n <= 62`.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    let &size = bytes.first().ok_or(ParseError::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(ParseError::BadChar { offset: 0, byte: size });
    }
    if size == 126 {
        return Err(ParseError::UnsupportedSize { offset: 0 });
    }
    let n = (size - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let payload_len = nbits.div_ceil(6);
    if bytes.len() < 1 + payload_len {
        return Err(ParseError::Truncated {
            expected: payload_len,
            found: bytes.len() - 1,
        });
    }
    if bytes.len() > 1 + payload_len {
        return Err(ParseError::TrailingData { offset: 1 + payload_len });
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadChar { offset: 1 + i, byte: b });
        }
        let group = b - 63;
        for j in 0..6 {
            let bit = group >> (5 - j) & 1 == 1;
            if k < nbits {
                if bit {
                    // Column order: k-th pair is (u, v) with k = v(v-1)/2 + u.
                    let (u, v) = pair_from_index(k);
                    g.set_edge(u, v);
                }
            } else if bit {
                return Err(ParseError::NonzeroPadding { offset: 1 + i });
            }
            k += 1;
        }
    }
    Ok(g)
}

fn pair_from_index(k: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

/// Encodes a graph with `n <= 62` in graph6.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(GraphError::TooLarge {
            n,
            max: MAX_GRAPH6_VERTICES,
        });
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.adjacent(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the edge-list format: one `u v` pair per line, `#`-prefixed lines
/// are comments, and the first comment supplies an optional display name.
/// The vertex count is `max id + 1`.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Option<String>), ParseError> {
    let mut name = None;
    let mut edges = Vec::new();
    let mut max_vertex = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if name.is_none() && !comment.trim().is_empty() {
                name = Some(comment.trim().to_string());
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(ParseError::EdgeList {
                    line: lineno + 1,
                    message: format!("expected exactly two vertex ids, got {line:?}"),
                })
            }
        };
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| ParseError::EdgeList {
                line: lineno + 1,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(ParseError::EdgeList {
                line: lineno + 1,
                message: format!("self-loop at vertex {u}"),
            });
        }
        max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    let g = Graph::from_edges(n, &edges).expect("edges validated during parsing");
    Ok((g, name))
}

/// Input format selector for [`parse_graphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    /// graph6 when the first non-blank line starts with a byte in 63..=126,
    /// edge list otherwise.
    #[default]
    Auto,
    Graph6,
    EdgeList,
}

/// Parses one or more graphs from `text`. graph6 input holds one graph per
/// line; an edge list describes a single graph.
pub fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<(Graph, Option<String>)>, ParseError> {
    let format = match format {
        InputFormat::Auto => {
            let first = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or(ParseError::NoGraph)?;
            if (63..=126).contains(&first.as_bytes()[0]) {
                InputFormat::Graph6
            } else {
                InputFormat::EdgeList
            }
        }
        other => other,
    };
    match format {
        InputFormat::Graph6 => {
            let graphs: Vec<_> = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| parse_graph6(l.trim()).map(|g| (g, None)))
                .collect::<Result<_, _>>()?;
            if graphs.is_empty() {
                return Err(ParseError::NoGraph);
            }
            Ok(graphs)
        }
        InputFormat::EdgeList => {
            let (g, name) = parse_edge_list(text)?;
            Ok(vec![(g, name)])
        }
        InputFormat::Auto => unreachable!(),
    }
}
