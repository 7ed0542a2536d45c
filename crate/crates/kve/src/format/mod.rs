//! Text formats. All parsers accept `#` comments (DIMACS uses `c` lines) and
//! blank lines, and report 1-based line numbers on failure.

mod dimacs;
mod edge_list;
mod ex3c;
mod labels;
mod roles;
mod solution;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use edge_list::{parse_edge_list, write_edge_list};
pub use ex3c::{parse_ex3c, write_ex3c};
pub use labels::parse_labels;
pub use roles::{parse_roles, write_roles};
pub use solution::{parse_solution, write_solution, Solution};

use kve_core::reductions::InstanceError;
use kve_core::tree_solver::LabelError;
use kve_core::{Graph, GraphError};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(&'static str),
    #[error("header declares {declared} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

impl ParseError {
    fn syntax(line: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { line, msg: msg.into() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    #[default]
    Edgelist,
    Dimacs,
}

impl GraphFormat {
    pub fn parse(self, text: &str) -> Result<Graph, ParseError> {
        match self {
            GraphFormat::Edgelist => parse_edge_list(text),
            GraphFormat::Dimacs => parse_dimacs(text),
        }
    }

    pub fn write(self, g: &Graph) -> String {
        match self {
            GraphFormat::Edgelist => write_edge_list(g),
            GraphFormat::Dimacs => write_dimacs(g),
        }
    }
}

/// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Parses exactly `N` whitespace-separated unsigned integers.
fn numbers<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N], ParseError> {
    let mut out = [0; N];
    let mut fields = line.split_whitespace();
    for slot in out.iter_mut() {
        let field = fields
            .next()
            .ok_or_else(|| ParseError::syntax(line_no, format!("expected {N} integers")))?;
        *slot = field
            .parse()
            .map_err(|_| ParseError::syntax(line_no, format!("not a nonnegative integer: {field:?}")))?;
    }
    if let Some(extra) = fields.next() {
        return Err(ParseError::syntax(line_no, format!("unexpected field {extra:?}")));
    }
    Ok(out)
}
