//! Decision procedures, certificates and the linear-algebra oracle.
//!
//! Plain signed tileability of `T_N` is membership of the staircase
//! polynomial `Delta_N` in the checkerboard ideal
//! `I = <1+x+x^2, 1+y+y^2, 1+xy+x^2y^2>`. Symmetric tileability is
//! membership of `Delta(A_k) = P + dQ` in the ideal generated by the six
//! tribone triplets and `Theta` inside `Z[s1, s2, t]`. Both bases are
//! computed once and cached.

mod certificate;
mod oracle;
pub mod selftest;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_z, GroebnerBasis};
use crate::hexlattice::region_xy;
use crate::invariants::{region_delta_st, theta_relation, tribone_triplet_generators, StPolynomial};
use crate::polynomial::{parse, MonomialOrder, Polynomial, VariableSet};

pub use certificate::{
    extract_certificate, extract_symmetric_certificate, tile_triangle, verify_region, verify_tiling, Tiling,
};
pub use oracle::{
    oracle_signed, oracle_sweep, oracle_symmetric, oracle_with, OracleOptions, OracleReport, DEFAULT_COLUMN_CAP,
    DEFAULT_MARGIN,
};

/// `1+x+x^2, 1+y+y^2, 1+xy+x^2y^2`: the three tribones anchored at the origin.
pub fn checkerboard_generators() -> Vec<Polynomial> {
    let v = VariableSet::xy();
    ["1 + x + x^2", "1 + y + y^2", "1 + x*y + x^2*y^2"]
        .iter()
        .map(|s| parse(s, &v).unwrap())
        .collect()
}

/// The six triplet generators followed by `Theta`.
pub fn tribone_generators() -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = tribone_triplet_generators()
        .into_iter()
        .map(StPolynomial::into_polynomial)
        .collect();
    g.push(theta_relation());
    g
}

/// Strong basis of `I` under deglex with `x > y`.
pub fn checkerboard_basis() -> &'static GroebnerBasis {
    static CELL: OnceLock<GroebnerBasis> = OnceLock::new();
    CELL.get_or_init(|| buchberger_z(&checkerboard_generators(), MonomialOrder::DegLex).unwrap())
}

/// Strong basis of the symmetric tribone ideal under lex `s1 > s2 > t`.
pub fn tribone_basis() -> &'static GroebnerBasis {
    static CELL: OnceLock<GroebnerBasis> = OnceLock::new();
    CELL.get_or_init(|| buchberger_z(&tribone_generators(), MonomialOrder::Lex).unwrap())
}

/// Outcome of a tileability query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub n: u32,
    pub symmetric: bool,
    pub tileable: bool,
    /// Normal form of the region class; zero iff tileable. Over `x, y` for
    /// plain queries, over `s1, s2, t` for symmetric ones.
    pub remainder: Polynomial,
    /// Whether the verdict agrees with the residue formula
    /// (`N mod 9` in {0, 8}, or `N mod 27` in {0, 26}).
    pub closed_form_check: bool,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    n: u32,
    symmetric: bool,
    tileable: bool,
    remainder: String,
    closed_form_check: bool,
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VerdictJson {
            n: self.n,
            symmetric: self.symmetric,
            tileable: self.tileable,
            remainder: self.remainder.to_string(),
            closed_form_check: self.closed_form_check,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = VerdictJson::deserialize(d)?;
        let vars = if v.symmetric {
            VariableSet::st()
        } else {
            VariableSet::xy()
        };
        let remainder = parse(&v.remainder, &vars).map_err(serde::de::Error::custom)?;
        Ok(Verdict {
            n: v.n,
            symmetric: v.symmetric,
            tileable: v.tileable,
            remainder,
            closed_form_check: v.closed_form_check,
        })
    }
}

/// The residue formula for plain tilings.
pub fn plain_formula(n: u32) -> bool {
    matches!(n % 9, 0 | 8)
}

/// The residue formula for symmetric tilings.
pub fn symmetric_formula(n: u32) -> bool {
    matches!(n % 27, 0 | 26)
}

pub fn signed_tileable(n: u32) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let remainder = checkerboard_basis().reduce_full(&region_xy(n));
    let tileable = remainder.is_zero();
    Ok(Verdict {
        n,
        symmetric: false,
        tileable,
        remainder,
        closed_form_check: tileable == plain_formula(n),
    })
}

pub fn symmetric_signed_tileable(n: u32) -> Result<Verdict> {
    let dec = region_delta_st(n)?;
    let remainder = tribone_basis().reduce_full(dec.total().value());
    let tileable = remainder.is_zero();
    Ok(Verdict {
        n,
        symmetric: true,
        tileable,
        remainder,
        closed_form_check: tileable == symmetric_formula(n),
    })
}

/// Dispatches on the flavour.
pub fn check(n: u32, symmetric: bool) -> Result<Verdict> {
    if symmetric {
        symmetric_signed_tileable(n)
    } else {
        signed_tileable(n)
    }
}
