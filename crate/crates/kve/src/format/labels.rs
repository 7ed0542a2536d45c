use kve_core::tree_solver::{Label, StLabeling};
use kve_core::Graph;

use super::{content_lines, ParseError};

/// Applies a labels file on top of the uniform labeling with demand `k`.
///
/// `v R` (or `v B`) sets a vertex label; `u v s` sets the demand of edge `uv`.
pub fn parse_labels(text: &str, g: &Graph, k: u32) -> Result<StLabeling, ParseError> {
    let mut lab = StLabeling::uniform(g, k);
    for (no, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let int = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::syntax(no, format!("not an integer: {s:?}")))
        };
        match fields.as_slice() {
            [v, tag] => {
                let v = int(v)?;
                g.check_vertex(v)?;
                let label = match *tag {
                    "R" => Label::Required,
                    "B" => Label::Free,
                    other => return Err(ParseError::syntax(no, format!("label must be R or B, got {other:?}"))),
                };
                lab.set_label(v, label);
            }
            [u, v, s] => {
                let s = u32::try_from(int(s)?).map_err(|_| ParseError::syntax(no, "demand too large"))?;
                lab.set_demand(g, int(u)?, int(v)?, s)?;
            }
            _ => return Err(ParseError::syntax(no, "expected `v R|B` or `u v s`")),
        }
    }
    Ok(lab)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_uniform_labeling() {
        let g = Graph::path(3);
        let lab = parse_labels("# marks\n0 R\n2 1 4\n", &g, 2).unwrap();
        assert_eq!(lab.label(0), Label::Required);
        assert_eq!(lab.label(1), Label::Free);
        assert_eq!(lab.demands(), &[2, 4]);
    }

    #[test]
    fn rejects_bad_lines() {
        let g = Graph::path(3);
        assert!(parse_labels("0 X\n", &g, 1).is_err());
        assert!(parse_labels("5 R\n", &g, 1).is_err());
        assert!(parse_labels("0 2 1\n", &g, 1).is_err());
        assert!(parse_labels("0\n", &g, 1).is_err());
    }
}
