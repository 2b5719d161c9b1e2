//! Graphviz DOT export and a parser for the subset we emit, so our own
//! output round-trips back to the same graph.

use crate::engine::Labeling;
use crate::graph::Graph;
use crate::rational::format_rat;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DotError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error("graph construction failed: {0}")]
    Graph(String),
}

/// Renders `g` as an undirected DOT graph. With a labeling, edges carry
/// their label and nodes carry their vertex value — presentation only.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph {\n");
    let values = labeling.map(|l| l.vertex_values(g));
    for v in g.vertices() {
        match &values {
            Some(vals) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", format_rat(&vals[v]));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        match labeling {
            Some(l) => {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [label=\"{}\"];",
                    format_rat(&l.labels[e])
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset produced by [`to_dot`]: a `graph { ... }` block
/// of node statements and `u -- v` edge statements with optional
/// attribute lists, which are ignored.
pub fn parse_dot(text: &str) -> Result<Graph, DotError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex: Option<usize> = None;
    let mut seen_open = false;
    for (lineno, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !seen_open {
            if line.starts_with("graph") && line.ends_with('{') {
                seen_open = true;
                continue;
            }
            return Err(DotError::Syntax(lineno + 1, "expected `graph {`".into()));
        }
        if line == "}" {
            continue;
        }
        // strip attribute list and trailing semicolon
        if let Some(idx) = line.find('[') {
            line = line[..idx].trim();
        }
        let line = line.trim_end_matches(';').trim();
        if line.is_empty() {
            continue;
        }
        let parse_id = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| DotError::Syntax(lineno + 1, format!("bad vertex id {tok:?}")))
        };
        if let Some((a, b)) = line.split_once("--") {
            let u = parse_id(a.trim())?;
            let v = parse_id(b.trim())?;
            edges.push((u, v));
            max_vertex = max_vertex.max(Some(u.max(v)));
        } else {
            let v = parse_id(line)?;
            max_vertex = max_vertex.max(Some(v));
        }
    }
    let n = max_vertex.map_or(0, |v| v + 1);
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v)
            .map_err(|e| DotError::Graph(e.to_string()))?;
    }
    Ok(g)
}
