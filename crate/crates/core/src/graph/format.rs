//! Plain-text graph format.
//!
//! ```text
//! u 4 3        <- `u` undirected / `d` directed, vertex count, edge count
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! Ids are 0-indexed. Edges are written back in the order they were read,
//! so a file produced by [`write_graph`] round-trips byte for byte.

use super::{DirectedTree, UndirectedGraph, VertexId};
use crate::error::{BurnError, Result};

/// Either kind of graph the text format can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(UndirectedGraph),
    Directed(DirectedTree),
}

impl AnyGraph {
    pub fn n(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.n(),
            AnyGraph::Directed(t) => t.n(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.edge_count(),
            AnyGraph::Directed(t) => t.arc_count(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }
}

impl From<UndirectedGraph> for AnyGraph {
    fn from(g: UndirectedGraph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<DirectedTree> for AnyGraph {
    fn from(t: DirectedTree) -> Self {
        AnyGraph::Directed(t)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> BurnError {
    BurnError::Parse { line, msg: msg.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn read_graph(text: &str) -> Result<AnyGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut tok = header.split_whitespace();
    let directed = match tok.next() {
        Some("u") => false,
        Some("d") => true,
        other => return Err(parse_err(1, format!("expected `u` or `d`, got {other:?}"))),
    };
    let n = parse_num(tok.next(), 1, "vertex count")?;
    let m = parse_num(tok.next(), 1, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_err(1, "trailing tokens in header"));
    }

    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut tok = line.split_whitespace();
        let a = parse_num(tok.next(), lineno, "endpoint")?;
        let b = parse_num(tok.next(), lineno, "endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens"));
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(parse_err(1, format!("header says {m} edges, found {}", edges.len())));
    }
    Ok(if directed {
        AnyGraph::Directed(DirectedTree::new(n, edges)?)
    } else {
        AnyGraph::Undirected(UndirectedGraph::new(n, edges)?)
    })
}

pub fn write_graph(g: &AnyGraph) -> String {
    let (kind, n, edges) = match g {
        AnyGraph::Undirected(g) => ('u', g.n(), g.edges()),
        AnyGraph::Directed(t) => ('d', t.n(), t.arcs()),
    };
    let mut out = format!("{kind} {n} {}\n", edges.len());
    for &(a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let text = "u 4 3\n2 3\n0 1\n2 1\n";
        assert_eq!(write_graph(&read_graph(text).unwrap()), text);
        let text = "d 3 2\n1 0\n1 2\n";
        assert_eq!(write_graph(&read_graph(text).unwrap()), text);
        let text = "u 1 0\n";
        assert_eq!(write_graph(&read_graph(text).unwrap()), text);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_graph(""), Err(BurnError::Parse { .. })));
        assert!(matches!(read_graph("x 2 1\n0 1\n"), Err(BurnError::Parse { line: 1, .. })));
        assert!(matches!(read_graph("u 2 2\n0 1\n"), Err(BurnError::Parse { .. })));
        assert!(matches!(read_graph("u 2 1\n0 q\n"), Err(BurnError::Parse { line: 2, .. })));
        assert_eq!(read_graph("u 2 1\n0 5\n"), Err(BurnError::InvalidVertex(5)));
    }
}
