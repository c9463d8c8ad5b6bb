//! Element and submonoid selections given on the command line.
//!
//! A selection is `@all` or a comma-separated list of generators, each an
//! element label or index. Labels win when a token is both. Commas nested in
//! parentheses belong to the token, so `(1,e)` is one label.

use monofact_core::{FiniteMonoid, SubMonoid};

pub fn parse_element(m: &FiniteMonoid, token: &str) -> Result<usize, String> {
    let token = token.trim();
    if let Some(x) = m.find_label(token) {
        return Ok(x);
    }
    match token.parse::<usize>() {
        Ok(x) if x < m.size() => Ok(x),
        Ok(x) => Err(format!("element index {x} is outside [0, {})", m.size())),
        Err(_) => Err(format!("unknown element {token:?}")),
    }
}

fn split_tokens(spec: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&spec[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&spec[start..]);
    out.into_iter().map(str::trim).filter(|t| !t.is_empty()).collect()
}

pub fn parse_elements(m: &FiniteMonoid, spec: &str) -> Result<Vec<usize>, String> {
    split_tokens(spec).into_iter().map(|t| parse_element(m, t)).collect()
}

/// The submonoid generated by the selection.
pub fn parse_submonoid(m: &FiniteMonoid, spec: &str) -> Result<SubMonoid, String> {
    if spec.trim() == "@all" {
        return Ok(SubMonoid::whole(m));
    }
    let gens = parse_elements(m, spec)?;
    SubMonoid::closure(m, gens).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monofact_core::catalog;

    #[test]
    fn labels_and_indices() {
        let s3 = catalog::symmetric3();
        assert_eq!(parse_submonoid(&s3, "(123)").unwrap().members(), &[0, 4, 5]);
        assert_eq!(parse_submonoid(&s3, "4").unwrap().members(), &[0, 4, 5]);
        assert!(parse_submonoid(&s3, "@all").unwrap().is_whole());
        assert!(parse_submonoid(&s3, "").unwrap().is_trivial());
        assert!(parse_submonoid(&s3, "(1234)").is_err());
        assert!(parse_submonoid(&s3, "6").is_err());
    }

    #[test]
    fn labels_take_precedence() {
        let b2 = catalog::b2();
        assert_eq!(parse_element(&b2, "1").unwrap(), 0);
        assert_eq!(parse_element(&b2, "z").unwrap(), 1);
    }

    #[test]
    fn nested_commas() {
        let m = catalog::b2_times_c2();
        let z = m.find_label("(z,e)").unwrap();
        let g = m.find_label("(1,g)").unwrap();
        assert_eq!(parse_elements(&m, "(z,e), (1,g)").unwrap(), vec![z, g]);
    }
}
