//! Line-oriented graph format.
//!
//! ```text
//! c optional comments
//! p wdg <n> <num_edges>
//! e <u> <v> <weight>     stable edge
//! u <u> <v> <x0>         unstable edge with its current value
//! ```
//!
//! Vertices are 0-based and edge ids follow the order of `e`/`u` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeKind, EdgeSpec, GraphError, WeaklyDynamicGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Build { line: usize, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<WeaklyDynamicGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut specs = Vec::new();
    let mut spec_lines = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                let format: String = field(toks.next(), line, "format")?;
                if format != "wdg" {
                    return Err(syntax(line, format!("unknown format `{format}`")));
                }
                let n = field(toks.next(), line, "vertex count")?;
                let m = field(toks.next(), line, "edge count")?;
                header = Some((line, n, m));
            }
            "e" | "u" => {
                if header.is_none() {
                    return Err(syntax(line, "edge line before header"));
                }
                let u = field(toks.next(), line, "vertex")?;
                let v = field(toks.next(), line, "vertex")?;
                let weight = field(toks.next(), line, "weight")?;
                let kind = if tag == "e" { EdgeKind::Stable } else { EdgeKind::Unstable };
                specs.push(EdgeSpec { u, v, weight, kind });
                spec_lines.push(line);
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(syntax(line, format!("unexpected token `{extra}`")));
        }
    }

    let Some((header_line, n, m)) = header else {
        return Err(syntax(last_line.max(1), "missing `p wdg` header"));
    };
    if specs.len() != m {
        return Err(syntax(
            header_line,
            format!("header declares {m} edges but {} were given", specs.len()),
        ));
    }
    WeaklyDynamicGraph::build(n, &specs).map_err(|err| match err {
        GraphError::SelfLoop { edge, .. }
        | GraphError::VertexOutOfRange { edge, .. }
        | GraphError::NonFiniteWeight { edge, .. } => {
            ParseError::Build { line: spec_lines[edge], source: err }
        }
        other => ParseError::Graph(other),
    })
}

/// Serializes a graph so that [`parse_graph`] reproduces it exactly.
pub fn write_graph(g: &WeaklyDynamicGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p wdg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        let tag = if e.is_unstable() { 'u' } else { 'e' };
        writeln!(out, "{tag} {} {} {}", e.u, e.v, e.weight).unwrap();
    }
    out
}
