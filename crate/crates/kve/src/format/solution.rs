use kve_core::{Outcome, VertexSet};

use super::ParseError;

pub type Solution = Outcome<VertexSet>;

/// Cardinality on the first line, sorted ids on the second, or `INFEASIBLE`.
pub fn write_solution(s: &Solution) -> String {
    match s {
        Outcome::Found(d) => {
            let ids: Vec<String> = d.iter().map(ToString::to_string).collect();
            format!("{}\n{}\n", d.len(), ids.join(" "))
        }
        Outcome::Infeasible => "INFEASIBLE\n".into(),
    }
}

/// Reads a file in the format of [`write_solution`]. A missing second line
/// is accepted for an empty set.
pub fn parse_solution(text: &str) -> Result<Solution, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'));
    let (_, first) = lines.next().ok_or(ParseError::Truncated("empty solution file"))?;
    let first = first.trim();
    if first == "INFEASIBLE" {
        return Ok(Outcome::Infeasible);
    }
    let card: usize = first
        .parse()
        .map_err(|_| ParseError::syntax(1, format!("bad cardinality {first:?}")))?;
    let ids = match lines.next() {
        Some((i, line)) => line
            .split_whitespace()
            .map(|f| {
                f.parse()
                    .map_err(|_| ParseError::syntax(i + 1, format!("bad vertex id {f:?}")))
            })
            .collect::<Result<Vec<usize>, _>>()?,
        None => Vec::new(),
    };
    if let Some((i, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(ParseError::syntax(i + 1, format!("trailing content {extra:?}")));
    }
    let set = VertexSet::from_vec(ids.clone());
    if set.len() != ids.len() {
        return Err(ParseError::syntax(2, "duplicate vertex ids"));
    }
    if set.len() != card {
        return Err(ParseError::CountMismatch {
            what: "vertices",
            declared: card,
            found: set.len(),
        });
    }
    Ok(Outcome::Found(set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let s = Outcome::Found(VertexSet::from_vec(vec![3, 1, 2]));
        assert_eq!(write_solution(&s), "3\n1 2 3\n");
        assert_eq!(parse_solution("3\n1 2 3\n").unwrap(), s);
        assert_eq!(write_solution(&Outcome::Found(VertexSet::new())), "0\n\n");
        assert_eq!(parse_solution("0\n").unwrap(), Outcome::Found(VertexSet::new()));
        assert_eq!(write_solution(&Outcome::Infeasible), "INFEASIBLE\n");
        assert_eq!(parse_solution("INFEASIBLE\n").unwrap(), Outcome::Infeasible);
    }

    #[test]
    fn rejects_inconsistent_files() {
        assert!(parse_solution("2\n1\n").is_err());
        assert!(parse_solution("2\n1 1\n").is_err());
        assert!(parse_solution("x\n").is_err());
        assert!(parse_solution("1\n1\n2\n").is_err());
        assert!(parse_solution("").is_err());
    }
}
