//! Multi-divisor division over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Keyed, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Quotients and remainder of a multi-divisor division.
///
/// Invariant: `dividend = sum(cofactors[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Working polynomial keyed by a term order; the last entry is the leading term.
#[derive(Clone, Debug)]
pub(crate) struct Work {
    order: MonomialOrder,
    terms: BTreeMap<Keyed, BigInt>,
}

impl Work {
    pub(crate) fn new(order: MonomialOrder, p: &Polynomial) -> Self {
        Work {
            order,
            terms: p
                .terms()
                .map(|(m, c)| (Keyed::new(order, m.clone()), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, BigInt)> {
        self.terms.pop_last().map(|(k, c)| (k.mono, c))
    }

    pub(crate) fn push(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Keyed::new(self.order, mono);
        match self.terms.entry(key) {
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

    /// `self -= q * mono * terms`.
    pub(crate) fn sub_scaled(&mut self, terms: &[(Monomial, BigInt)], mono: &Monomial, q: &BigInt) {
        for (m, c) in terms {
            self.push(m.mul(mono), -(c * q));
        }
    }
}

/// Terms of `p` in descending `order`, owned.
pub(crate) fn sorted_terms(p: &Polynomial, order: MonomialOrder) -> Vec<(Monomial, BigInt)> {
    p.terms_desc(order)
        .into_iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

/// Divides `f` by `divisors` in sequence order.
///
/// A term `c*m` is reduced by the first divisor whose leading term `c'*m'`
/// satisfies `m' | m` and `c' | c`; otherwise it moves to the remainder. The
/// quotient-with-remainder variant on coefficients is
/// [`GroebnerBasis::reduce_full`](crate::groebner::GroebnerBasis::reduce_full).
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<DivisionResult> {
    let vars = f.vars();
    let mut prepared = Vec::with_capacity(divisors.len());
    for d in divisors {
        if d.vars() != vars {
            return Err(Error::VariableSetMismatch {
                left: vars.to_string(),
                right: d.vars().to_string(),
            });
        }
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let terms = sorted_terms(d, order);
        prepared.push(terms);
    }

    let mut cofactors = vec![Polynomial::zero(vars); divisors.len()];
    let mut remainder = Polynomial::zero(vars);
    let mut work = Work::new(order, f);
    while let Some((m, c)) = work.pop_leading() {
        let hit = prepared.iter().enumerate().find_map(|(i, terms)| {
            let (lm, lc) = &terms[0];
            let shift = m.div(lm)?;
            (&c % lc).is_zero().then(|| (i, shift, &c / lc))
        });
        match hit {
            Some((i, shift, q)) => {
                work.sub_scaled(&prepared[i][1..], &shift, &q);
                cofactors[i].add_term(shift, q);
            }
            None => remainder.add_term(m, c),
        }
    }
    Ok(DivisionResult { cofactors, remainder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{parse, VariableSet};

    fn check_reconstruction(f: &Polynomial, divisors: &[Polynomial], r: &DivisionResult) {
        let mut acc = r.remainder.clone();
        for (q, d) in r.cofactors.iter().zip(divisors) {
            acc = &acc + &(q * d);
        }
        assert_eq!(&acc, f);
    }

    #[test]
    fn self_division() {
        let v = VariableSet::xy();
        let g = parse("3*x^2*y - 2*y + 1", &v).unwrap();
        let r = divide(&g, std::slice::from_ref(&g), MonomialOrder::Lex).unwrap();
        assert!(r.remainder.is_zero());
        assert_eq!(r.cofactors, vec![Polynomial::one(&v)]);
    }

    #[test]
    fn irreducible_dividend() {
        let v = VariableSet::xy();
        let x = parse("x", &v).unwrap();
        let g = parse("1 + x + x^2", &v).unwrap();
        let r = divide(&x, std::slice::from_ref(&g), MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, x);
        assert!(r.cofactors[0].is_zero());
    }

    #[test]
    fn empty_divisor_list() {
        let v = VariableSet::xy();
        let f = parse("x + 2", &v).unwrap();
        let r = divide(&f, &[], MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, f);
        assert!(r.cofactors.is_empty());
    }

    #[test]
    fn coefficient_divisibility_is_required() {
        let v = VariableSet::xy();
        let f = parse("3*x + 2*x*y", &v).unwrap();
        let d = parse("2*x", &v).unwrap();
        let r = divide(&f, std::slice::from_ref(&d), MonomialOrder::Lex).unwrap();
        // 2xy = y * 2x reduces, 3x does not
        assert_eq!(r.remainder, parse("3*x", &v).unwrap());
        check_reconstruction(&f, &[d], &r);
    }

    #[test]
    fn zero_divisor_is_rejected() {
        let v = VariableSet::xy();
        let f = parse("x", &v).unwrap();
        assert_eq!(
            divide(&f, &[Polynomial::zero(&v)], MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn remainder_of_q0_by_the_published_basis() {
        let st = VariableSet::st();
        let basis: Vec<Polynomial> = [
            "27+9*t+3*t^2",
            "-27+t^3",
            "9*s2+3*s2*t+s2*t^2",
            "3*s2^2",
            "s2^2*t",
            "s2^4",
            "3*s1+s2^2",
            "s2^2+s1*t",
            "s1*s2^3",
            "s1^2*s2",
            "9+s1^3+s2^3+3*t+t^2",
        ]
        .iter()
        .map(|s| parse(s, &st).unwrap())
        .collect();
        let q0 = parse("3*s1 - 3*s1^2*s2 + s1*s2^3", &st).unwrap();
        let r = divide(&q0, &basis, MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, parse("-s2^2", &st).unwrap());
        check_reconstruction(&q0, &basis, &r);
    }
}
