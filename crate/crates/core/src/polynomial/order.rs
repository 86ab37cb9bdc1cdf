use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::Error;

/// Term order on monomials of a fixed variable set.
///
/// Variable precedence follows the declaration order of the
/// [`VariableSet`](super::VariableSet): the first variable is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    DegLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" => Ok(MonomialOrder::DegLex),
            other => Err(Error::InvalidArgument(format!(
                "unknown monomial order `{other}` (expected lex or deglex)"
            ))),
        }
    }
}

/// A monomial tagged with the order it should be compared under, so it can
/// key a `BTreeMap` whose last entry is the leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Keyed {
    pub(crate) order: MonomialOrder,
    pub(crate) mono: Monomial,
}

impl Keyed {
    pub(crate) fn new(order: MonomialOrder, mono: Monomial) -> Self {
        Keyed { order, mono }
    }
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&self.mono, &other.mono)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_ignores_degree() {
        // s1 > s2^4 under s1 > s2 > t
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0, 0]), &m(&[0, 4, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_longer_on_tied_prefix() {
        // x^2 y > x^2
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[2, 1, 0]), &m(&[2, 0, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn deglex_degree_dominates() {
        // x^2 y < y^4
        assert_eq!(MonomialOrder::DegLex.compare(&m(&[2, 1]), &m(&[0, 4])), Ordering::Less);
        assert_eq!(
            MonomialOrder::DegLex.compare(&m(&[3, 0]), &m(&[2, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn parses_names() {
        assert_eq!("lex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Lex);
        assert_eq!("deglex".parse::<MonomialOrder>().unwrap(), MonomialOrder::DegLex);
        assert!("grevlex".parse::<MonomialOrder>().is_err());
    }
}
