use std::fmt::Write;

use kve_core::reductions::Ex3CInstance;

use super::{content_lines, numbers, ParseError};

/// `q m` header, then `m` lines with three element ids each.
pub fn parse_ex3c(text: &str) -> Result<Ex3CInstance, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::Truncated("missing `q m` header"))?;
    let [q, m] = numbers(line, header)?;
    let subsets = lines
        .map(|(no, l)| numbers::<3>(no, l).map(Vec::from))
        .collect::<Result<Vec<_>, _>>()?;
    if subsets.len() != m {
        return Err(ParseError::CountMismatch {
            what: "subsets",
            declared: m,
            found: subsets.len(),
        });
    }
    Ok(Ex3CInstance::new(q, subsets)?)
}

pub fn write_ex3c(inst: &Ex3CInstance) -> String {
    let mut out = format!("{} {}\n", inst.q(), inst.len());
    for [a, b, c] in inst.subsets() {
        writeln!(out, "{a} {b} {c}").unwrap();
    }
    out
}
