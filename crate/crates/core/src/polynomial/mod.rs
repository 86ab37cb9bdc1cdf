//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`Polynomial`] is a finitely supported map from [`Monomial`]s to nonzero
//! [`BigInt`] coefficients over a named [`VariableSet`]. Terms are kept in a
//! `BTreeMap` so iteration is deterministic; callers that need a particular
//! term order ask for [`Polynomial::terms_desc`] or
//! [`Polynomial::leading_term`].
//!
//! Quotient rings of the form `Z[v1, .., vn] / <m - 1>` (for example
//! `Z[x,y,z]/<xyz - 1>`) are handled by [`Polynomial::normalize_quotient`],
//! which picks the representative whose monomials are not divisible by `m`.
//! Laurent monomials are never stored: [`Monomial::from_laurent`] clears
//! negative exponents by multiplying with a power of the relation monomial.

pub(crate) mod division;
mod order;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use division::{divide, DivisionResult};
pub(crate) use order::Keyed;
pub use order::MonomialOrder;
pub use text::parse;

/// Ordered list of distinct variable names.
///
/// The position of a name fixes its precedence: index 0 is the largest
/// variable for both lex and deglex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidArgument(format!("invalid variable name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VariableSet { names: names.into() })
    }

    fn fixed(names: &[&str]) -> Self {
        VariableSet::new(names.iter().copied()).expect("static variable names are valid")
    }

    /// `x > y`, the chart used for the square-lattice style computations.
    pub fn xy() -> Self {
        Self::fixed(&["x", "y"])
    }

    /// `x > y > z`, the translation ring `P` (with `xyz = 1`).
    pub fn xyz() -> Self {
        Self::fixed(&["x", "y", "z"])
    }

    /// `a > b > c`, the cell ring `Q` (with `abc = 1`).
    pub fn abc() -> Self {
        Self::fixed(&["a", "b", "c"])
    }

    /// `s1 > s2 > t`, coordinates on the rotation-invariant subring of `Q`.
    pub fn st() -> Self {
        Self::fixed(&["s1", "s2", "t"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn ensure_same(&self, other: &VariableSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VariableSetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariableSet[{self}]")
    }
}

/// Exponent vector. The derived `Ord` is the lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    /// Representative of a Laurent monomial modulo `relation - 1`: negative
    /// exponents are cleared by multiplying with the smallest sufficient
    /// power of `relation`. Every variable must occur in `relation`.
    pub fn from_laurent(exponents: &[i64], relation: &Monomial) -> Self {
        assert_eq!(exponents.len(), relation.arity());
        let mut shift = 0i64;
        for (&e, &r) in exponents.iter().zip(&relation.0) {
            assert!(r > 0, "relation monomial must involve every variable");
            if e < 0 {
                let r = i64::from(r);
                shift = shift.max((-e + r - 1) / r);
            }
        }
        Monomial(
            exponents
                .iter()
                .zip(&relation.0)
                .map(|(&e, &r)| u32::try_from(e + shift * i64::from(r)).expect("exponent fits u32"))
                .collect(),
        )
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Largest `k` with `relation^k | self`; `None` when `relation` is 1.
    fn relation_power(&self, relation: &Monomial) -> Option<u32> {
        self.0
            .iter()
            .zip(&relation.0)
            .filter(|(_, &r)| r > 0)
            .map(|(&e, &r)| e / r)
            .min()
    }
}

/// Polynomial with integer coefficients over a [`VariableSet`].
///
/// No stored coefficient is zero; the zero polynomial has no terms.
///
/// The arithmetic operator impls (`+`, `-`, `*`) panic when the operands live
/// over different variable sets; use [`Polynomial::try_add`] and friends to
/// get an error instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(vars: &VariableSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &VariableSet, c: impl Into<BigInt>) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    pub fn term(vars: &VariableSet, mono: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(mono.arity(), vars.len(), "monomial arity does not match variable set");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::term(vars, Monomial::variable(vars.len(), i), 1))
    }

    /// Builds a polynomial from possibly repeated terms, merging like terms.
    pub fn from_terms<I, C>(vars: &VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.arity(), vars.len(), "monomial arity does not match variable set");
            p.add_term(m, c.into());
        }
        p
    }

    /// Sum of `x^e` over the given exponent vectors, each with coefficient 1
    /// (repeats accumulate).
    pub fn from_exponents<I>(vars: &VariableSet, exps: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        Self::from_terms(vars, exps.into_iter().map(|e| (Monomial::new(e), 1)))
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn terms_desc(&self, order: MonomialOrder) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &BigInt)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            MonomialOrder::DegLex => self.terms.iter().max_by(|a, b| order.compare(a.0, b.0)),
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest exponent of variable `index` among the terms.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.0[index]).max().unwrap_or(0)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `c * mono * self`.
    pub fn mul_term(&self, mono: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `(1, .., 1)`. For the
    /// integer-point transform of a finite set this is its cardinality.
    pub fn evaluate_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Canonical representative modulo `<relation - 1>`: every monomial is
    /// divided by the largest power of `relation` it contains.
    pub fn normalize_quotient(&self, relation: &Monomial) -> Polynomial {
        assert_eq!(relation.arity(), self.vars.len());
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let reduced = match m.relation_power(relation) {
                Some(k) if k > 0 => Monomial(m.0.iter().zip(&relation.0).map(|(&e, &r)| e - k * r).collect()),
                _ => m.clone(),
            };
            out.add_term(reduced, c.clone());
        }
        out
    }

    /// Evaluates `self` at `images[i]` for variable `i`. All images must share
    /// one variable set; when `relation` is given every intermediate product
    /// is normalized modulo `<relation - 1>` in the target ring.
    pub fn substitute(&self, images: &[Polynomial], relation: Option<&Monomial>) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            return Err(Error::InvalidArgument(format!(
                "substitution needs {} images, got {}",
                self.vars.len(),
                images.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for img in images {
            target.ensure_same(&img.vars)?;
        }
        let norm = |p: Polynomial| match relation {
            Some(r) => p.normalize_quotient(r),
            None => p,
        };
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&target)]; images.len()];
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = norm(powers[i].last().unwrap() * &images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    prod = norm(&prod * &powers[i][e as usize]);
                }
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Applies a permutation of variables: variable `i` goes to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; m.arity()];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.vars, self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("operands over different variable sets")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(s: &str) -> Polynomial {
        parse(s, &VariableSet::xy()).unwrap()
    }

    #[test]
    fn addition_merges_and_drops_zeros() {
        assert_eq!(xy("1 + x") + xy("x + y"), xy("1 + 2*x + y"));
        let f = xy("3*x^2*y - 7 + y");
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn checkerboard_decomposition() {
        let t1 = xy("1 + x + y");
        let t2 = xy("x + y + x*y");
        let x = xy("x");
        let y = xy("y");
        let lhs = &t1 + &(&x * &t1) + (&y * &t1) - t2.clone() + (&x * &y) * &t2;
        let board = xy("1 + x + x^2") * xy("1 + y + y^2");
        assert_eq!(lhs, board);
        assert_eq!(board.len(), 9);
        assert_eq!(board.evaluate_all_ones(), BigInt::from(9));
        assert_eq!(lhs.evaluate_all_ones(), BigInt::from(9));
    }

    #[test]
    fn multiplicative_identity_and_annihilator() {
        let f = xy("2*x^3 - y + 5");
        assert_eq!(&f * &Polynomial::one(f.vars()), f);
        assert!((&f * &Polynomial::zero(f.vars())).is_zero());
    }

    #[test]
    fn mismatched_variable_sets_error() {
        let f = xy("x");
        let g = parse("a", &VariableSet::abc()).unwrap();
        assert!(matches!(f.try_add(&g), Err(Error::VariableSetMismatch { .. })));
        assert!(matches!(f.try_mul(&g), Err(Error::VariableSetMismatch { .. })));
    }

    #[test]
    fn normalize_modulo_xyz() {
        let v = VariableSet::xyz();
        let rel = Monomial::new(vec![1, 1, 1]);
        let p = |s: &str| parse(s, &v).unwrap();
        assert_eq!(p("x*y*z").normalize_quotient(&rel), p("1"));
        assert_eq!(p("x^2*y^2*z").normalize_quotient(&rel), p("x*y"));
        assert_eq!(p("x^3*y^5*z^4 - y^2").normalize_quotient(&rel), p("y^2 * z - y^2"));
    }

    #[test]
    fn laurent_monomials_are_cleared() {
        let rel = Monomial::new(vec![1, 1, 1]);
        assert_eq!(Monomial::from_laurent(&[-1, 0, -2], &rel), Monomial::new(vec![1, 2, 0]));
        assert_eq!(Monomial::from_laurent(&[2, 0, 1], &rel), Monomial::new(vec![2, 0, 1]));
    }

    #[test]
    fn all_ones_evaluation() {
        assert_eq!(Polynomial::zero(&VariableSet::xy()).evaluate_all_ones(), BigInt::zero());
        let staircase = Polynomial::from_exponents(
            &VariableSet::xy(),
            (0..10u32).flat_map(|i| (0..=i).map(move |j| vec![i, j])),
        );
        assert_eq!(staircase.evaluate_all_ones(), BigInt::from(55));
    }

    #[test]
    fn substitution_into_quotient_ring() {
        // (s1, s2) -> (a+b+c, ab+bc+ca); s1*s2 = sum a^2 b + sum a b^2 + 3abc
        let abc = VariableSet::abc();
        let rel = Monomial::new(vec![1, 1, 1]);
        let s1 = parse("a + b + c", &abc).unwrap();
        let s2 = parse("a*b + b*c + c*a", &abc).unwrap();
        let t = parse("1", &abc).unwrap();
        let f = parse("s1*s2", &VariableSet::st()).unwrap();
        let got = f.substitute(&[s1, s2, t], Some(&rel)).unwrap();
        let want = parse("a^2*b + b^2*c + c^2*a + a*b^2 + b*c^2 + c*a^2 + 3", &abc).unwrap();
        assert_eq!(got, want);
    }
}
