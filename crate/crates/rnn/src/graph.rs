//! Simple undirected graphs with bitset adjacency, plus parsers for the
//! graph6, DIMACS .col and plain edge-list formats.

use crate::bitset::VertexSet;
use thiserror::Error;

/// Immutable simple undirected graph. Vertices are `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

// Equality ignores the label; it is display metadata only.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {index} out of range for graph of order {n}")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
}

impl Graph {
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            label: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { index: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        assert!(v < self.n, "vertex {v} out of range (order {})", self.n);
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        self.neighbours(v).with(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// BFS connectivity. The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = VertexSet::empty(self.n);
        seen.insert(0);
        let mut queue = vec![0usize];
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    reached += 1;
                    queue.push(v);
                }
            }
        }
        reached == self.n
    }

    /// 2-colourability via BFS over every component. The empty graph is bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.adj[u].iter() {
                    if side[v] == usize::MAX {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `keep` (in the given order; vertex `keep[i]` becomes `i`).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::edgeless(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.edge_count())?;
        if let Some(l) = &self.label {
            write!(f, ", {l}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Parsers
// ---------------------------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph6: {msg} at byte {offset}")]
    Graph6 { offset: usize, msg: String },
    #[error("dimacs: {msg} (line {line})")]
    Dimacs { line: usize, msg: String },
    #[error("edge list: {0}")]
    EdgeList(String),
}

fn g6_err(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Graph6 { offset, msg: msg.into() }
}

/// Decodes one line of graph6 (short form n ≤ 62 and the 4-byte extended form).
/// Reference: https://users.cecs.anu.edu.au/~bdm/data/formats.txt
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let val = |off: usize| -> Result<u64, ParseError> {
        let b = *bytes
            .get(off)
            .ok_or_else(|| g6_err(off, "truncated input"))?;
        if !(63..=126).contains(&b) {
            return Err(g6_err(off, format!("out-of-range character 0x{b:02x}")));
        }
        Ok(u64::from(b - 63))
    };
    let (n, header_len) = if bytes[0] != 126 {
        (val(0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        // 126 n1 n2 n3, 18-bit n
        let n = (val(1)? << 12 | val(2)? << 6 | val(3)?) as usize;
        if n <= 62 {
            return Err(g6_err(0, format!("extended header used for n={n} <= 62")));
        }
        (n, 4)
    } else {
        return Err(g6_err(0, "8-byte graph6 headers (n > 258047) are not supported"));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < header_len + nbytes {
        return Err(g6_err(bytes.len(), format!(
            "truncated bit-vector: need {nbytes} bytes after header, got {}",
            bytes.len() - header_len
        )));
    }
    if bytes.len() > header_len + nbytes {
        return Err(g6_err(header_len + nbytes, "trailing bytes after bit-vector"));
    }
    let mut g = Graph::edgeless(n);
    // upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let chunk = val(header_len + bit / 6)?;
            if chunk >> (5 - bit % 6) & 1 != 0 {
                g.add_edge(row, col).unwrap();
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding (short form for n ≤ 62, else the 4-byte form).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 258_047, "graph6 emit supports n <= 258047");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0usize;
    for col in 1..n {
        for row in 0..col {
            chunk <<= 1;
            chunk |= u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// DIMACS .col subset: "c" comments, one "p edge n m" line, "e u v" lines
/// (1-indexed). Duplicate edges are idempotent; an edge-count mismatch is
/// reported as a warning, not an error.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<String>), ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(ParseError::Dimacs { line: lineno, msg: "duplicate problem line".into() });
                }
                let kind = tok.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(ParseError::Dimacs { line: lineno, msg: format!("unsupported problem type {kind:?}") });
                }
                let n: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| ParseError::Dimacs { line: lineno, msg: "bad vertex count".into() })?;
                declared_m = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| ParseError::Dimacs { line: lineno, msg: "bad edge count".into() })?;
                graph = Some(Graph::edgeless(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| ParseError::Dimacs { line: lineno, msg: "edge before problem line".into() })?;
                let mut idx = || -> Result<usize, ParseError> {
                    let v: usize = tok
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| ParseError::Dimacs { line: lineno, msg: "bad edge endpoint".into() })?;
                    if v == 0 || v > g.n() {
                        return Err(ParseError::Dimacs {
                            line: lineno,
                            msg: format!("vertex {v} out of range 1..={}", g.n()),
                        });
                    }
                    Ok(v - 1)
                };
                let (u, v) = (idx()?, idx()?);
                if u == v {
                    return Err(ParseError::Dimacs { line: lineno, msg: format!("loop at vertex {}", u + 1) });
                }
                g.add_edge(u, v).unwrap();
            }
            Some(other) => {
                return Err(ParseError::Dimacs { line: lineno, msg: format!("unknown line type {other:?}") });
            }
            None => {}
        }
    }
    let g = graph.ok_or(ParseError::Empty)?;
    if g.edge_count() != declared_m {
        warnings.push(format!(
            "declared {declared_m} edges, found {} distinct",
            g.edge_count()
        ));
    }
    Ok((g, warnings))
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        use std::fmt::Write;
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        use std::fmt::Write;
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Plain edge list: first token is n, then 0-indexed "u v" pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tok = text.split_whitespace();
    let n: usize = tok
        .next()
        .ok_or(ParseError::Empty)?
        .parse()
        .map_err(|_| ParseError::EdgeList("first token must be the vertex count".into()))?;
    let mut g = Graph::edgeless(n);
    while let Some(a) = tok.next() {
        let b = tok
            .next()
            .ok_or_else(|| ParseError::EdgeList(format!("dangling endpoint {a:?}")))?;
        let parse = |t: &str| -> Result<usize, ParseError> {
            t.parse()
                .map_err(|_| ParseError::EdgeList(format!("non-integer token {t:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        g.add_edge(u, v).map_err(|e| ParseError::EdgeList(e.to_string()))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn graph6_star_k14() {
        // 'D' => n=5; bits 0000001111 => edges (0,4)(1,4)(2,4)(3,4)
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn graph6_triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(emit_graph6(&g), "Bw");
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert!(matches!(parse_graph6("D?"), Err(ParseError::Graph6 { .. })));
        assert!(matches!(parse_graph6("B\u{7f}"), Err(ParseError::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn graph6_extended_header() {
        let g = generate(&FamilySpec::cycle(63)).unwrap();
        let enc = emit_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        let back = parse_graph6(&enc).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn dimacs_k3() {
        let (g, warn) = parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(warn.is_empty());
    }

    #[test]
    fn dimacs_single_edge_and_errors() {
        let (g, _) = parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(ParseError::Dimacs { line: 1, .. })));
        let (_, warn) = parse_dimacs("p edge 3 2\ne 1 2\ne 1 2\n").unwrap();
        assert_eq!(warn.len(), 1);
    }

    #[test]
    fn edge_list() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        let k1 = parse_edge_list("1").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert!(parse_edge_list("2\n0 2\n").is_err());
        assert!(parse_edge_list("2\n0 x\n").is_err());
    }

    #[test]
    fn structural_queries() {
        let c5 = generate(&FamilySpec::cycle(5)).unwrap();
        assert_eq!(c5.closed_neighbourhood(0).iter().collect::<Vec<_>>(), vec![0, 1, 4]);
        assert!(c5.is_connected());
        assert!(!c5.is_bipartite());
        let n2 = Graph::edgeless(2);
        assert!(!n2.is_connected());
        assert!(n2.is_bipartite());
        assert!(Graph::edgeless(1).is_connected());
        assert!(!Graph::edgeless(0).is_connected());
        assert!(Graph::edgeless(0).is_bipartite());
    }
}
