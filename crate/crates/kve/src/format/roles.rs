use std::fmt::Write;

use kve_core::reductions::Role;

use super::{content_lines, ParseError};

/// One `vertex role` line per vertex, in id order.
pub fn write_roles(roles: &[Role]) -> String {
    let mut out = String::new();
    for (v, r) in roles.iter().enumerate() {
        writeln!(out, "{v} {r}").unwrap();
    }
    out
}

pub fn parse_roles(text: &str) -> Result<Vec<Role>, ParseError> {
    content_lines(text)
        .enumerate()
        .map(|(expected, (no, line))| {
            let (v, role) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| ParseError::syntax(no, "expected `vertex role`"))?;
            if v.parse::<usize>().ok() != Some(expected) {
                return Err(ParseError::syntax(no, format!("expected vertex {expected}")));
            }
            role.trim().parse().map_err(|e| ParseError::syntax(no, format!("{e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let roles = vec![Role::Original(0), Role::Clique(0), Role::Hub, Role::Tail];
        let text = write_roles(&roles);
        assert_eq!(text, "0 original:0\n1 clique:0\n2 hub\n3 tail\n");
        assert_eq!(parse_roles(&text).unwrap(), roles);
        assert!(parse_roles("1 hub\n").is_err());
    }
}
