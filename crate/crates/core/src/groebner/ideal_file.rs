//! Plain-text ideal files.
//!
//! ```text
//! # comments run to the end of the line
//! vars: s1 s2 t
//! order: lex
//! 27 + 9*t + 3*t^2
//! -27 + t^3
//! ```
//!
//! The `vars:` header must precede the first polynomial; `order:` is optional.
//! Each remaining non-blank line holds one generator.

use crate::error::{Error, Result};
use crate::polynomial::{parse, MonomialOrder, Polynomial, VariableSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: VariableSet,
    pub order: Option<MonomialOrder>,
    pub generators: Vec<Polynomial>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::IdealFile {
        line,
        message: message.into(),
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut vars: Option<VariableSet> = None;
    let mut order = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(err(line_no, "duplicate `vars:` header"));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let vs = VariableSet::new(names).map_err(|e| err(line_no, e.to_string()))?;
            vars = Some(vs);
            continue;
        }
        if let Some(rest) = line.strip_prefix("order:") {
            let o: MonomialOrder = rest.trim().parse().map_err(|e: Error| err(line_no, e.to_string()))?;
            order = Some(o);
            continue;
        }
        let Some(vs) = &vars else {
            return Err(err(line_no, "missing `vars:` header before the first polynomial"));
        };
        let p = parse(line, vs).map_err(|e| err(line_no, e.to_string()))?;
        generators.push(p);
    }
    let vars = vars.ok_or_else(|| err(0, "missing `vars:` header"))?;
    Ok(IdealFile {
        vars,
        order,
        generators,
    })
}

pub fn format_ideal_file(vars: &VariableSet, order: Option<MonomialOrder>, generators: &[Polynomial]) -> String {
    let mut out = format!("vars: {vars}\n");
    if let Some(o) = order {
        out.push_str(&format!("order: {o}\n"));
    }
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# tribone basis\nvars: s1 s2 t\norder: lex\n\n27 + 9*t + 3*t^2  # first\n3*s2^2\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.vars, VariableSet::st());
        assert_eq!(f.order, Some(MonomialOrder::Lex));
        assert_eq!(f.generators.len(), 2);
        let again = parse_ideal_file(&format_ideal_file(&f.vars, f.order, &f.generators)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_ideal_file("x + 1\n"),
            Err(Error::IdealFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_ideal_file("vars: x y\n\nx + q\n"),
            Err(Error::IdealFile { line: 3, .. })
        ));
        assert!(matches!(
            parse_ideal_file("# nothing\n"),
            Err(Error::IdealFile { line: 0, .. })
        ));
        assert!(matches!(
            parse_ideal_file("vars: x y\norder: revlex\n"),
            Err(Error::IdealFile { line: 2, .. })
        ));
    }
}
