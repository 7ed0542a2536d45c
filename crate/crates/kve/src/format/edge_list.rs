use std::fmt::Write;

use kve_core::Graph;

use super::{content_lines, numbers, ParseError};

/// `n m` header, then `m` lines `u v` with 0-based ids.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::Truncated("missing `n m` header"))?;
    let [n, m] = numbers(line, header)?;
    let edges = lines
        .map(|(no, l)| numbers::<2>(no, l).map(|[u, v]| (u, v)))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
