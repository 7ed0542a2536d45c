use std::fmt::Write;

use kve_core::Graph;

use super::ParseError;

/// `p edge n m` header, `e u v` lines with 1-based ids, `c` comment lines.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        let int = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::syntax(no, format!("not an integer: {s:?}")))
        };
        match (tag, rest.as_slice()) {
            ("c", _) => {}
            ("p", [kind, n, m]) if *kind == "edge" || *kind == "col" => {
                if header.is_some() {
                    return Err(ParseError::syntax(no, "second problem line"));
                }
                header = Some((int(n)?, int(m)?));
            }
            ("e", [u, v]) => {
                let n = header
                    .ok_or_else(|| ParseError::syntax(no, "edge before problem line"))?
                    .0;
                let (u, v) = (int(u)?, int(v)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::syntax(no, format!("vertex ids must lie in 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(ParseError::syntax(no, format!("unrecognized line {raw:?}"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::Truncated("missing `p edge n m` line"))?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_ids() {
        let g = parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\np edge 2 1\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("").is_err());
        assert!(parse_dimacs("p edge 2 1\nx 1 2\n").is_err());
    }
}
