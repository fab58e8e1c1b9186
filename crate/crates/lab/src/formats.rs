//! DOT and plain edge-list text.

use std::fmt::Write as _;

use mhc_core::constructions::LabeledGraph;
use mhc_core::graph::{Graph, GraphError};

/// DOT text for a construction, with role labels as node names.
pub fn emit_dot(lg: &LabeledGraph) -> String {
    let names: Vec<String> = (0..lg.graph.order()).map(|v| lg.label(v)).collect();
    dot(&lg.graph, &names)
}

/// DOT text with vertex indices as node names.
pub fn emit_dot_plain(g: &Graph) -> String {
    let names: Vec<String> = (0..g.order()).map(|v| v.to_string()).collect();
    dot(g, &names)
}

fn dot(g: &Graph, names: &[String]) -> String {
    let mut out = String::from("graph G {\n");
    for name in names {
        let _ = writeln!(out, "  {name};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", names[e.lo()], names[e.hi()]);
    }
    out.push_str("}\n");
    out
}

/// `n m` followed by one `u v` line per edge, 0-based.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: expected two integers")]
    Syntax { line: usize },
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn pair(line: &str, no: usize) -> Result<(usize, usize), EdgeListError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(EdgeListError::Syntax { line: no }),
    }
}

/// Parses edge-list text. Blank lines are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = pair(header, no)?;
    let edges = lines.map(|(no, l)| pair(l, no)).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(EdgeListError::Count { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, edges)?)
}
