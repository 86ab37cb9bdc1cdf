//! Reproduction of the published tables: the triplet generators, the
//! tribone Groebner basis and the remainder tables of both families.

use serde::Serialize;

use super::{tribone_basis, tribone_generators};
use crate::groebner::ideal_equal;
use crate::invariants::{region_delta_st, tribone_triplet_generators, StPolynomial};
use crate::polynomial::{parse, MonomialOrder, Polynomial, VariableSet};

pub const TRIPLETS: [&str; 6] = [
    "-3*s1 + 2*s2^2",
    "3*s1 - s2^2 + s1*t",
    "s1^2*s2 - s2^2 - s1*t",
    "-s1^2*s2 + 2*s2^2 - s1*t + s2^2*t",
    "-3*s1 + s1^2*s2 - s2^2",
    "3*s1 - 2*s1^2*s2 - s2^2 + s1*s2^3 + s1*t - s2^2*t",
];

pub const BASIS: [&str; 11] = [
    "27 + 9*t + 3*t^2",
    "-27 + t^3",
    "9*s2 + 3*s2*t + s2*t^2",
    "3*s2^2",
    "s2^2*t",
    "s2^4",
    "3*s1 + s2^2",
    "s2^2 + s1*t",
    "s1*s2^3",
    "s1^2*s2",
    "9 + s1^3 + s2^3 + 3*t + t^2",
];

/// `(label, a side length in the case, P, Q, remainder of P, remainder of Q)`.
pub const REMAINDERS: [(&str, u32, &str, &str, &str, &str); 6] = [
    ("N=3k-1, k=3d", 8, "0", "3*s1 - 3*s1^2*s2 + s1*s2^3", "0", "-s2^2"),
    (
        "N=3k-1, k=3d+1",
        11,
        "s1",
        "9*s1 - 6*s1^2*s2 + s1^3*s2^2 + 4*s1*t - 2*s1^2*s2*t + s1*t^2",
        "s1",
        "-s2^2",
    ),
    (
        "N=3k-1, k=3d+2",
        14,
        "11*s1 + s1^4 - 9*s1^2*s2 + 5*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t - 2*s1^2*s2*t + s2^2*t + s1*t^2",
        "24*s1 + s1^4 - 11*s1^2*s2 + s1^5*s2 - 3*s1^3*s2^2 + 4*s1*s2^3 + 8*s1*t - s1^4*t - s1^2*s2*t + 3*s1*t^2",
        "-s1",
        "-s2^2",
    ),
    ("N=3k, k=3d", 9, "0", "s1^2*s2 - 2*s2^2", "0", "s2^2"),
    (
        "N=3k, k=3d+1",
        12,
        "-s1 + s2^2",
        "-s1^2*s2 - 2*s2^2 + s1*s2^3 - s2^2*t",
        "-s1 + s2^2",
        "s2^2",
    ),
    (
        "N=3k, k=3d-1",
        6,
        "7*s1 - 5*s1^2*s2 + 3*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t - 2*s1^2*s2*t + s2^2*t + s1*t^2",
        "2*s1^2*s2 + 4*s2^2 - 4*s1*s2^3 + s2^5",
        "s1",
        "s2^2",
    ),
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn st(s: &str) -> Polynomial {
    parse(s, &VariableSet::st()).expect("table entries parse")
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

pub fn run() -> Vec<Check> {
    let mut out = Vec::new();

    for (i, (got, want)) in tribone_triplet_generators().iter().zip(TRIPLETS).enumerate() {
        let want = StPolynomial::new(&st(want)).unwrap();
        out.push(check(
            format!("triplet generator {}", i + 1),
            got == &want,
            format!("computed {got}"),
        ));
    }

    let published: Vec<Polynomial> = BASIS.iter().map(|s| st(s)).collect();
    let gb = tribone_basis();
    let equal = ideal_equal(&tribone_generators(), &published, MonomialOrder::Lex).unwrap_or(false);
    out.push(check(
        "tribone basis ideal equality",
        equal && gb.is_complete(),
        format!("{} computed elements", gb.len()),
    ));

    for (label, n, p, q, rp, rq) in REMAINDERS {
        let dec = match region_delta_st(n) {
            Ok(d) => d,
            Err(e) => {
                out.push(check(format!("{label} decomposition"), false, e.to_string()));
                continue;
            }
        };
        let same_p = dec.p == StPolynomial::new(&st(p)).unwrap();
        let same_q = dec.q == StPolynomial::new(&st(q)).unwrap();
        out.push(check(
            format!("{label} P and Q"),
            same_p && same_q,
            format!("P = {}, Q = {}", dec.p, dec.q),
        ));
        for (which, val, want) in [("P", &dec.p, rp), ("Q", &dec.q, rq)] {
            let rem = gb.reduce_full(val.value());
            let ok = gb.contains(&(&rem - &st(want))) && rem.is_zero() == (want == "0");
            out.push(check(
                format!("{label} remainder of {which}"),
                ok,
                format!("{rem} (table: {want})"),
            ));
        }
    }
    out
}
