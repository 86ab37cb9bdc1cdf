//! Rotation-invariant polynomials and their `(s1, s2, t)` coordinates.
//!
//! The invariants of `Q = Z[a,b,c]/<abc - 1>` under `a -> b -> c -> a` form
//! the ring `Z[s1, s2, t]/<Theta>` with
//!
//! ```text
//! s1 = a + b + c,  s2 = ab + bc + ca,  t = a^2 b + b^2 c + c^2 a,
//! Theta = t^2 - (s1 s2 - 3) t + (s1^3 + s2^3 - 6 s1 s2 + 9).
//! ```
//!
//! Since `Theta` is monic in `t`, every class has a unique representative
//! `P(s1, s2) + Q(s1, s2) t`; [`StPolynomial`] always stores that one. The
//! same presentation holds for `P = Z[x,y,z]/<xyz - 1>` with `x, y, z` in
//! place of `a, b, c`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hexlattice::{abc_relation, reduced_sector_form_xy, rotate120, tribone_poly, xy_to_abc, Cell, TriboneType};
use crate::polynomial::{parse, Monomial, Polynomial, VariableSet};

const S1: usize = 0;
const S2: usize = 1;
const T: usize = 2;

/// `f + rot(f) + rot^2(f)` for a polynomial in three cyclically permuted
/// variables, normalized modulo the product of the variables.
pub fn delta_symmetrize(f: &Polynomial) -> Polynomial {
    let r1 = rotate120(f);
    let r2 = rotate120(&r1);
    (&(&f.normalize_quotient(&abc_relation()) + &r1) + &r2).normalize_quotient(&abc_relation())
}

/// `Theta(s1, s2, t)`.
pub fn theta_relation() -> Polynomial {
    parse("t^2 - s1*s2*t + 3*t + s1^3 + s2^3 - 6*s1*s2 + 9", &VariableSet::st()).unwrap()
}

/// Replaces every `t^2` using `Theta = 0` until the `t`-degree is below 2.
fn reduce_mod_theta(p: &Polynomial) -> Polynomial {
    let vars = VariableSet::st();
    let t_coeff = parse("s1*s2 - 3", &vars).unwrap();
    let constant = parse("s1^3 + s2^3 - 6*s1*s2 + 9", &vars).unwrap();
    let t = Polynomial::var(&vars, "t").unwrap();
    // t^2 = (s1 s2 - 3) t - (s1^3 + s2^3 - 6 s1 s2 + 9)
    let t_squared = &(&t_coeff * &t) - &constant;
    let mut cur = p.clone();
    loop {
        if cur.degree_in(T) < 2 {
            return cur;
        }
        let mut next = Polynomial::zero(&vars);
        for (m, c) in cur.terms() {
            let e = m.exponents();
            if e[T] >= 2 {
                let lower = Monomial::new(vec![e[S1], e[S2], e[T] - 2]);
                next = &next + &t_squared.mul_term(&lower, c);
            } else {
                next = &next + &Polynomial::term(&vars, m.clone(), c.clone());
            }
        }
        cur = next;
    }
}

/// An element of `Z[s1, s2, t]/<Theta>` in its canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StPolynomial {
    value: Polynomial,
}

impl StPolynomial {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.vars() != &VariableSet::st() {
            return Err(Error::VariableSetMismatch {
                left: VariableSet::st().to_string(),
                right: p.vars().to_string(),
            });
        }
        Ok(StPolynomial {
            value: reduce_mod_theta(p),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(&parse(text, &VariableSet::st())?)
    }

    pub fn zero() -> Self {
        StPolynomial {
            value: Polynomial::zero(&VariableSet::st()),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        StPolynomial {
            value: Polynomial::constant(&VariableSet::st(), c),
        }
    }

    pub fn s1() -> Self {
        Self::var("s1")
    }

    pub fn s2() -> Self {
        Self::var("s2")
    }

    pub fn t() -> Self {
        Self::var("t")
    }

    fn var(name: &str) -> Self {
        StPolynomial {
            value: Polynomial::var(&VariableSet::st(), name).unwrap(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The canonical representative, of `t`-degree at most 1.
    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.value
    }

    /// `(P, Q)` with `self = P + Q t` and `P`, `Q` free of `t`.
    pub fn components(&self) -> (Polynomial, Polynomial) {
        let vars = VariableSet::st();
        let mut p = Polynomial::zero(&vars);
        let mut q = Polynomial::zero(&vars);
        for (m, c) in self.value.terms() {
            let e = m.exponents();
            let term = Polynomial::term(&vars, Monomial::new(vec![e[S1], e[S2], 0]), c.clone());
            if e[T] == 0 {
                p = &p + &term;
            } else {
                q = &q + &term;
            }
        }
        (p, q)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        StPolynomial {
            value: self.value.scale(c),
        }
    }

    /// Substitutes the symmetric expansions in `a, b, c` and normalizes.
    pub fn expand_abc(&self) -> Polynomial {
        let v = VariableSet::abc();
        let images = ["a + b + c", "a*b + b*c + c*a", "a^2*b + b^2*c + c^2*a"].map(|s| parse(s, &v).unwrap());
        self.value.substitute(&images, Some(&abc_relation())).unwrap()
    }

    /// The same in `x, y, z` (with `t` standing for the x^2 y orbit).
    pub fn expand_xyz(&self) -> Polynomial {
        let v = VariableSet::xyz();
        let images = ["x + y + z", "x*y + y*z + z*x", "x^2*y + y^2*z + z^2*x"].map(|s| parse(s, &v).unwrap());
        self.value.substitute(&images, Some(&abc_relation())).unwrap()
    }
}

impl fmt::Display for StPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl Serialize for StPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.value.to_string())
    }
}

impl<'de> Deserialize<'de> for StPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        StPolynomial::parse(&text).map_err(serde::de::Error::custom)
    }
}

macro_rules! st_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&StPolynomial> for &StPolynomial {
            type Output = StPolynomial;
            fn $method(self, rhs: &StPolynomial) -> StPolynomial {
                StPolynomial {
                    value: reduce_mod_theta(&(&self.value $op &rhs.value)),
                }
            }
        }
        impl $tr for StPolynomial {
            type Output = StPolynomial;
            fn $method(self, rhs: StPolynomial) -> StPolynomial {
                &self $op &rhs
            }
        }
    };
}

st_binop!(Add, add, +);
st_binop!(Sub, sub, -);
st_binop!(Mul, mul, *);

impl Neg for &StPolynomial {
    type Output = StPolynomial;
    fn neg(self) -> StPolynomial {
        StPolynomial { value: -&self.value }
    }
}

impl Neg for StPolynomial {
    type Output = StPolynomial;
    fn neg(self) -> StPolynomial {
        -&self
    }
}

/// Memoized coordinates of `D(p, q) = Delta(a^p b^q)`.
struct Rewriter {
    memo: HashMap<(u32, u32), StPolynomial>,
}

impl Rewriter {
    fn new() -> Self {
        let mut memo = HashMap::new();
        memo.insert((0, 0), StPolynomial::constant(3));
        memo.insert((1, 0), StPolynomial::s1());
        memo.insert((1, 1), StPolynomial::s2());
        memo.insert((2, 1), StPolynomial::t());
        Rewriter { memo }
    }

    /// Each rule expresses `D(p, q)` through terms that are smaller in
    /// `p + q`, or of equal size and closer to the `q >= 2` case, which
    /// always shrinks.
    fn d(&mut self, p: u32, q: u32) -> StPolynomial {
        let (p, q) = if p == 0 { (q, 0) } else { (p, q) };
        if let Some(v) = self.memo.get(&(p, q)) {
            return v.clone();
        }
        let v = if p >= 2 && q >= 2 {
            // D(ab) D(p-1, q-1) = D(p, q) + D(p-1, q-2) + D(p-2, q-1)
            &(&(&StPolynomial::s2() * &self.d(p - 1, q - 1)) - &self.d(p - 1, q - 2)) - &self.d(p - 2, q - 1)
        } else if q == 1 {
            // D(a) D(p-1, 1) = D(p, 1) + D(p-2, 0) + D(p-1, 2), p >= 3
            &(&(&StPolynomial::s1() * &self.d(p - 1, 1)) - &self.d(p - 2, 0)) - &self.d(p - 1, 2)
        } else if q == 0 {
            // D(a) D(p-1, 0) = D(p, 0) + D(1, p-1) + D(p-1, 1), p >= 2
            &(&(&StPolynomial::s1() * &self.d(p - 1, 0)) - &self.d(1, p - 1)) - &self.d(p - 1, 1)
        } else {
            // p = 1, q >= 2: D(ab) D(q-1, 0) = D(1, q) + D(q, 1) + D(q-2, 0)
            &(&(&StPolynomial::s2() * &self.d(q - 1, 0)) - &self.d(q, 1)) - &self.d(q - 2, 0)
        };
        self.memo.insert((p, q), v.clone());
        v
    }
}

/// Coordinates of a rotation-invariant polynomial in `a, b, c`.
///
/// Each orbit of monomials is represented by its member `a^p b^q` with
/// `p >= 1`, and `Delta(a^p b^q)` is rewritten by the product identities.
pub fn to_st_coords(f: &Polynomial) -> Result<StPolynomial> {
    if f.vars() != &VariableSet::abc() {
        return Err(Error::VariableSetMismatch {
            left: VariableSet::abc().to_string(),
            right: f.vars().to_string(),
        });
    }
    let f = f.normalize_quotient(&abc_relation());
    if rotate120(&f) != f {
        return Err(Error::NotInvariant);
    }
    let mut rw = Rewriter::new();
    let mut out = StPolynomial::zero();
    for (m, c) in f.terms() {
        let e = m.exponents();
        if m.is_one() {
            out = &out + &StPolynomial::constant(c.clone());
        } else if e[2] == 0 && e[0] >= 1 {
            out = &out + &rw.d(e[0], e[1]).scale(c);
        }
    }
    Ok(out)
}

/// `Delta(a^p b^q)` in `(s1, s2, t)` coordinates.
pub fn delta_monomial_st(p: u32, q: u32) -> StPolynomial {
    Rewriter::new().d(p, q)
}

/// `[Delta(T_x(a)), Delta(T_y(a)), Delta(T_z(a)), Delta(T_x(ax)), Delta(T_y(ax)), Delta(T_z(ax))]`.
/// Every rotation-symmetric tribone triplet is a translate of one of these
/// by an invariant, so they generate the symmetric tile module.
pub fn tribone_triplet_generators() -> Vec<StPolynomial> {
    [Cell::ORIGIN, Cell::axial(1, 0)]
        .into_iter()
        .flat_map(|c| TriboneType::ALL.map(|t| (t, c)))
        .map(|(t, c)| to_st_coords(&delta_symmetrize(&tribone_poly(t, c))).expect("triplets are invariant"))
        .collect()
}

/// Which residue family a symmetric triangle side belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `N = 3k - 1`
    #[serde(rename = "3k-1")]
    ThreeKMinusOne,
    /// `N = 3k`
    #[serde(rename = "3k")]
    ThreeK,
}

/// `Delta(A_k) = P + d Q`, with `A_k` the reduced sector class of `T_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDecomposition {
    pub n: u32,
    pub family: Family,
    pub k: u32,
    pub d: u32,
    /// 0, 1, 2 for `k = 3d, 3d+1, 3d+2` (family `3k-1`); 0, 1, -1 for
    /// `k = 3d, 3d+1, 3d-1` (family `3k`).
    pub case_index: i8,
    pub p: StPolynomial,
    pub q: StPolynomial,
}

impl RegionDecomposition {
    pub fn total(&self) -> StPolynomial {
        &self.p + &self.q.scale(&BigInt::from(self.d))
    }
}

fn xy(terms: &[(u32, u32)]) -> Polynomial {
    Polynomial::from_exponents(&VariableSet::xy(), terms.iter().map(|&(i, j)| vec![i, j]))
}

fn st_of_xy(g: &Polynomial) -> StPolynomial {
    to_st_coords(&delta_symmetrize(&xy_to_abc(g))).expect("symmetrized input is invariant")
}

/// The decomposition for `T_n`, `n` not congruent to 1 mod 3.
pub fn region_delta_st(n: u32) -> Result<RegionDecomposition> {
    // fails for the fixed-cell family and tiny n
    reduced_sector_form_xy(n)?;
    let delta2 = xy(&[(0, 0), (1, 0), (1, 1)]);
    let nabla2 = xy(&[(0, 0), (0, 1), (1, 1)]);
    let (family, k, d, case_index, p_xy, q_xy) = if n % 3 == 2 {
        let k = (n + 1) / 3;
        let (p, q) = match k % 3 {
            0 => (xy(&[]), &xy(&[(1, 0)]) * &delta2),
            1 => (xy(&[(0, 0)]), &xy(&[(1, 1)]) * &delta2),
            _ => (xy(&[(2, 2), (1, 2)]), &xy(&[(1, 2)]) * &delta2),
        };
        (Family::ThreeKMinusOne, k, k / 3, (k % 3) as i8, p, q)
    } else {
        let k = n / 3;
        match k % 3 {
            0 => (Family::ThreeK, k, k / 3, 0, xy(&[]), nabla2),
            1 => (
                Family::ThreeK,
                k,
                k / 3,
                1,
                xy(&[(0, 0), (1, 0)]),
                &xy(&[(1, 0)]) * &nabla2,
            ),
            _ => (
                Family::ThreeK,
                k,
                (k + 1) / 3,
                -1,
                xy(&[(2, 2)]),
                &xy(&[(2, 0)]) * &nabla2,
            ),
        }
    };
    Ok(RegionDecomposition {
        n,
        family,
        k,
        d,
        case_index,
        p: st_of_xy(&p_xy),
        q: st_of_xy(&q_xy),
    })
}

/// `Delta(x^p y^q) = x^p y^q + y^p z^q + z^p x^q` in `P = Z[x,y,z]/<xyz - 1>`.
pub fn delta_xyz(p: u32, q: u32) -> Polynomial {
    let m = Polynomial::term(&VariableSet::xyz(), Monomial::new(vec![p, q, 0]), 1);
    delta_symmetrize(&m)
}

/// One product identity among the `Delta(x^p y^q)`, both sides expanded in `P`.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The five product identities at `(p, q)`, for `p, q >= 2`.
pub fn product_identities(p: u32, q: u32) -> Vec<Identity> {
    assert!(p >= 2 && q >= 2, "identities are stated for p, q >= 2");
    let d = delta_xyz;
    let r = abc_relation();
    let prod = |a: Polynomial, b: Polynomial| (&a * &b).normalize_quotient(&r);
    let sum3 = |a: Polynomial, b: Polynomial, c: Polynomial| &(&a + &b) + &c;
    vec![
        Identity {
            name: "D(xy) D(x^(p-1) y^(q-1))",
            lhs: prod(d(1, 1), d(p - 1, q - 1)),
            rhs: sum3(d(p, q), d(p - 1, q - 2), d(p - 2, q - 1)),
        },
        Identity {
            name: "D(x) D(x^(p-1) y^q)",
            lhs: prod(d(1, 0), d(p - 1, q)),
            rhs: sum3(d(p, q), d(p - 1, q + 1), d(p - 2, q - 1)),
        },
        Identity {
            name: "D(x) D(x^p y^(q-1))",
            lhs: prod(d(1, 0), d(p, q - 1)),
            rhs: sum3(d(p, q), d(p + 1, q - 1), d(p - 1, q - 2)),
        },
        Identity {
            name: "D(x) D(x^(p-1))",
            lhs: prod(d(1, 0), d(p - 1, 0)),
            rhs: sum3(d(p, 0), d(p - 1, 1), d(1, p - 1)),
        },
        Identity {
            name: "D(xy) D(x^(p-1))",
            lhs: prod(d(1, 1), d(p - 1, 0)),
            rhs: sum3(d(p, 1), d(p - 2, 0), d(1, p)),
        },
    ]
}

/// `Theta(sigma1, sigma2, theta)` expanded in `P`; zero by the presentation.
pub fn theta_in_p() -> Polynomial {
    StPolynomial {
        value: theta_relation(),
    }
    .expand_xyz()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(s: &str) -> Polynomial {
        parse(s, &VariableSet::abc()).unwrap()
    }

    fn st(s: &str) -> StPolynomial {
        StPolynomial::parse(s).unwrap()
    }

    #[test]
    fn symmetrization_examples() {
        assert_eq!(delta_symmetrize(&abc("a")), abc("a + b + c"));
        assert_eq!(delta_symmetrize(&abc("1")), abc("3"));
        assert_eq!(delta_symmetrize(&abc("a^2*b")), abc("a^2*b + b^2*c + c^2*a"));
    }

    #[test]
    fn theta_is_monic_and_vanishes() {
        let th = theta_relation();
        assert_eq!(th.coefficient(&Monomial::new(vec![0, 0, 2])), BigInt::from(1));
        assert!(theta_in_p().is_zero());
        let raw = StPolynomial { value: th };
        assert!(raw.expand_abc().is_zero());
        assert!(StPolynomial::new(&theta_relation()).unwrap().is_zero());
    }

    #[test]
    fn coordinate_examples() {
        let c = |s: &str| to_st_coords(&delta_symmetrize(&abc(s))).unwrap();
        assert_eq!(c("a"), st("s1"));
        assert_eq!(c("a*b"), st("s2"));
        assert_eq!(c("a^2*b"), st("t"));
        assert_eq!(c("a^2*b^2"), st("s2^2 - 2*s1"));
        assert_eq!(c("a^3*b"), st("s1*t - s2^2 + s1"));
        assert_eq!(c("1"), st("3"));
        assert!(matches!(to_st_coords(&abc("a")), Err(Error::NotInvariant)));
    }

    #[test]
    fn rewriting_is_sound() {
        for p in 0..=8 {
            for q in 0..=8 {
                let f = delta_symmetrize(&Polynomial::term(&VariableSet::abc(), Monomial::new(vec![p, q, 0]), 1));
                assert_eq!(to_st_coords(&f).unwrap().expand_abc(), f, "p = {p}, q = {q}");
            }
        }
    }

    #[test]
    fn canonical_form_is_linear_in_t() {
        let f = st("t^3 + s1*t^2 + 5");
        assert!(f.value().degree_in(2) <= 1);
        let (p, q) = f.components();
        let t = StPolynomial::t();
        let rebuilt = &StPolynomial::new(&p).unwrap() + &(&StPolynomial::new(&q).unwrap() * &t);
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn triplet_table() {
        let g = tribone_triplet_generators();
        assert_eq!(g[0], st("-3*s1 + 2*s2^2"));
        assert_eq!(g[1], st("3*s1 - s2^2 + s1*t"));
        assert_eq!(g[5], st("3*s1 - 2*s1^2*s2 - s2^2 + s1*s2^3 + s1*t - s2^2*t"));
    }

    #[test]
    fn decomposition_examples() {
        let r = region_delta_st(26).unwrap();
        assert_eq!((r.k, r.d, r.case_index), (9, 3, 0));
        assert!(r.p.is_zero());
        assert_eq!(r.q, st("3*s1 - 3*s1^2*s2 + s1*s2^3"));
        let r = region_delta_st(27).unwrap();
        assert!(r.p.is_zero());
        assert_eq!(r.q, st("s1^2*s2 - 2*s2^2"));
        assert_eq!(region_delta_st(12).unwrap().p, st("-s1 + s2^2"));
        assert!(matches!(region_delta_st(10), Err(Error::FixedCell { n: 10 })));
    }

    #[test]
    fn identities_small_case() {
        assert!(product_identities(2, 2).iter().all(Identity::holds));
    }
}
