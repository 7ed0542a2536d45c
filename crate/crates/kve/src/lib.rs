//! File formats and command-line plumbing for the `kve` tool.
//!
//! Everything graph-theoretic lives in `kve_core`; this crate reads and writes
//! the text formats, splits forests for the tree solver and hosts the binary.

pub mod forest;
pub mod format;

pub use format::{
    parse_dimacs, parse_edge_list, parse_ex3c, parse_labels, parse_roles, parse_solution, write_dimacs,
    write_edge_list, write_ex3c, write_roles, write_solution, GraphFormat, ParseError, Solution,
};
