//! Text interchange: graph6, Graphviz DOT, and a plain edge list.
//!
//! graph6 follows the nauty conventions: the vertex count `N(n)` followed by
//! the upper triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, each byte
//! offset by 63.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const GRAPH6_MAX_N: u64 = 68_719_476_735;

pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if n as u64 > GRAPH6_MAX_N {
        return Err(GraphError::TooLarge(n));
    }
    let mut out = Vec::new();
    push_size(&mut out, n as u64);

    let mut bits = BitPacker::default();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    out.extend(bits.finish());
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn push_size(out: &mut Vec<u8>, n: u64) {
    let six = |shift: u32| ((n >> shift) & 0x3f) as u8 + 63;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend([six(12), six(6), six(0)]);
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| six(6 * k)));
    }
}

#[derive(Default)]
struct BitPacker {
    bytes: Vec<u8>,
    current: u8,
    filled: u32,
}

impl BitPacker {
    fn push(&mut self, bit: bool) {
        self.current = (self.current << 1) | bit as u8;
        self.filled += 1;
        if self.filled == 6 {
            self.bytes.push(self.current + 63);
            self.current = 0;
            self.filled = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.filled > 0 {
            self.bytes.push((self.current << (6 - self.filled)) + 63);
        }
        self.bytes
    }
}

/// Parses one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; byte offsets in errors count from the start
/// of `text`.
pub fn decode_graph6(text: &str) -> Result<Graph, ParseError> {
    let raw = text.as_bytes();
    let start = if text.starts_with(GRAPH6_HEADER) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let end = text.trim_end_matches(['\n', '\r']).len();
    let body = &raw[start..end.max(start)];
    let err = |pos: usize, message: &str| ParseError::Graph6 {
        offset: start + pos,
        message: message.to_string(),
    };

    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the printable range 63..=126"));
    }
    let value = |pos: usize| u64::from(body[pos] - 63);

    let (n, mut pos) = match body {
        [] => return Err(err(0, "empty input")),
        [126, 126, ..] => {
            if body.len() < 8 {
                return Err(err(body.len(), "truncated 36-bit vertex count"));
            }
            ((2..8).fold(0, |acc, p| (acc << 6) | value(p)), 8)
        }
        [126, ..] => {
            if body.len() < 4 {
                return Err(err(body.len(), "truncated 18-bit vertex count"));
            }
            ((1..4).fold(0, |acc, p| (acc << 6) | value(p)), 4)
        }
        _ => (value(0), 1),
    };
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;

    let pairs = n as u128 * n.saturating_sub(1) as u128 / 2;
    let needed = pairs.div_ceil(6);
    let available = (body.len() - pos) as u128;
    if available < needed {
        return Err(err(body.len(), "truncated adjacency bits"));
    }
    if available > needed {
        return Err(err(pos + needed as usize, "unexpected trailing bytes"));
    }

    let mut edges = Vec::new();
    let mut bit = 0u32;
    for j in 1..n {
        for i in 0..j {
            if value(pos) >> (5 - bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == 6 {
                bit = 0;
                pos += 1;
            }
        }
    }
    if bit > 0 && value(pos) & ((1 << (6 - bit)) - 1) != 0 {
        return Err(err(pos, "non-zero padding bits"));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Undirected DOT document: a node line per vertex, then one `u -- v` line
/// per edge in ascending order.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> Result<String, GraphError> {
    if let Some(labels) = labels {
        if labels.len() != g.vertex_count() {
            return Err(GraphError::LabelCount {
                expected: g.vertex_count(),
                got: labels.len(),
            });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(labels) => {
                let escaped = labels[v].replace('\\', "\\\\").replace('"', "\\\"");
                writeln!(out, "  {v} [label=\"{escaped}\"];").unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// `n m` header followed by `u v` lines with `u < v`, ascending.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let pair = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut fields = l.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, format!("expected two non-negative integers, got '{l}'"))),
        }
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "missing 'n m' header".into()))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(line, format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(err(line, "duplicate edges".into()));
    }
    Ok(g)
}
