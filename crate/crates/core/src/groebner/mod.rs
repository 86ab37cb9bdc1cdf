//! Strong Groebner bases over the integers.
//!
//! Over a field, Buchberger completion only needs S-polynomials. Over `Z`
//! the leading coefficients matter: the ideal `<2x, 3x>` contains `x`, which
//! no S-polynomial of the two generators produces. Following the usual
//! approach for Euclidean domains, every critical pair yields
//!
//! - an S-polynomial `(l/c1)(L/m1) f - (l/c2)(L/m2) g`, with `L` the lcm of
//!   the leading monomials and `l` the lcm of the leading coefficients, and
//! - a GCD-polynomial `a (L/m1) f + b (L/m2) g`, with `a c1 + b c2 = gcd(c1, c2)`,
//!
//! and both are reduced with the Euclidean coefficient rule. The result is a
//! *strong* basis: every nonzero `h` in the ideal has a basis element whose
//! leading term divides the leading term of `h`, coefficients included. Ideal
//! membership is then decided by full reduction.
//!
//! Every basis element carries its expression over the original generators,
//! so membership answers come with integral certificates.

mod ideal_file;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::division::{sorted_terms, Work};
use crate::polynomial::{Monomial, MonomialOrder, Polynomial, VariableSet};

pub use ideal_file::{format_ideal_file, parse_ideal_file, IdealFile};

/// Bezout coefficients `(g, a, b)` with `a*c1 + b*c2 = g = gcd(c1, c2) > 0`.
///
/// When one coefficient divides the other the trivial combination is used
/// (`(sign c1, 0)` if `c1 | c2`); otherwise `a` is the solution of smallest
/// absolute value, ties going to positive `a`.
pub fn bezout(c1: &BigInt, c2: &BigInt) -> (BigInt, BigInt, BigInt) {
    assert!(!c1.is_zero() && !c2.is_zero(), "bezout of zero");
    if (c2 % c1).is_zero() {
        return (c1.abs(), c1.signum(), BigInt::zero());
    }
    if (c1 % c2).is_zero() {
        return (c2.abs(), BigInt::zero(), c2.signum());
    }
    let e = c1.extended_gcd(c2);
    let (mut g, mut a, mut b) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        a = -a;
        b = -b;
    }
    // a + k*(c2/g), b - k*(c1/g) sweep all solutions
    let step_a = (c2 / &g).abs();
    let step_b = c1 / &g * c2.signum();
    let k = nearest_quotient(&a, &step_a);
    a -= &k * &step_a;
    b += &k * &step_b;
    debug_assert_eq!(&a * c1 + &b * c2, g);
    (g, a, b)
}

/// `q` such that `c - q*d` has the least absolute value; ties favour a
/// positive remainder.
fn nearest_quotient(c: &BigInt, d: &BigInt) -> BigInt {
    let q0 = c.div_floor(d);
    let candidates = [&q0 - 1, q0.clone(), &q0 + 1];
    candidates
        .into_iter()
        .min_by(|p, q| {
            let rp = c - p * d;
            let rq = c - q * d;
            rp.abs().cmp(&rq.abs()).then(rp.is_negative().cmp(&rq.is_negative()))
        })
        .unwrap()
}

fn leading(p: &Polynomial, order: MonomialOrder) -> Result<(Monomial, BigInt)> {
    p.leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or(Error::ZeroPolynomial)
}

/// Multipliers `(u1, u2)` with `S(f, g) = u1*f - u2*g`.
fn s_multipliers(lt1: &(Monomial, BigInt), lt2: &(Monomial, BigInt)) -> ((Monomial, BigInt), (Monomial, BigInt)) {
    let lcm_m = lt1.0.lcm(&lt2.0);
    let lcm_c = lt1.1.lcm(&lt2.1);
    (
        (lcm_m.div(&lt1.0).unwrap(), &lcm_c / &lt1.1),
        (lcm_m.div(&lt2.0).unwrap(), &lcm_c / &lt2.1),
    )
}

/// Multipliers `(u1, u2)` with `G(f, g) = u1*f + u2*g`.
fn g_multipliers(lt1: &(Monomial, BigInt), lt2: &(Monomial, BigInt)) -> ((Monomial, BigInt), (Monomial, BigInt)) {
    let lcm_m = lt1.0.lcm(&lt2.0);
    let (_, a, b) = bezout(&lt1.1, &lt2.1);
    ((lcm_m.div(&lt1.0).unwrap(), a), (lcm_m.div(&lt2.0).unwrap(), b))
}

/// S-polynomial over `Z`; the leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    f.try_add(&Polynomial::zero(g.vars()))?;
    let ((m1, c1), (m2, c2)) = s_multipliers(&leading(f, order)?, &leading(g, order)?);
    Ok(f.mul_term(&m1, &c1) - g.mul_term(&m2, &c2))
}

/// GCD-polynomial over `Z`; its leading term is `gcd(c1, c2) * lcm(m1, m2)`.
pub fn gcd_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    f.try_add(&Polynomial::zero(g.vars()))?;
    let ((m1, a), (m2, b)) = g_multipliers(&leading(f, order)?, &leading(g, order)?);
    Ok(f.mul_term(&m1, &a) + g.mul_term(&m2, &b))
}

/// Membership answer with a witness over the original generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub member: bool,
    /// `f = sum(cofactors[j] * generators[j])`; present iff `member`.
    pub cofactors: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug)]
struct Element {
    poly: Polynomial,
    terms: Vec<(Monomial, BigInt)>,
    cofactors: Vec<Polynomial>,
}

impl Element {
    fn new(poly: Polynomial, cofactors: Vec<Polynomial>, order: MonomialOrder) -> Self {
        let (poly, cofactors) = if poly.leading_term(order).is_some_and(|(_, c)| c.is_negative()) {
            (-poly, cofactors.into_iter().map(|c| -c).collect())
        } else {
            (poly, cofactors)
        };
        let terms = sorted_terms(&poly, order);
        Element { poly, terms, cofactors }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn lt(&self) -> (Monomial, BigInt) {
        self.terms[0].clone()
    }

    /// Leading term divides `other`'s, coefficient included.
    fn strongly_divides(&self, other: &Element) -> bool {
        self.lm().divides(other.lm()) && (other.lc() % self.lc()).is_zero()
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: usize,
}

/// Reduces `f` by `basis`. A term `c*m` is reduced by the first element whose
/// leading monomial divides `m` and whose leading coefficient divides `c`;
/// failing that, by the first with `|lc| <= |c|`, replacing `c` by its
/// least-absolute remainder. Quotients are accumulated when requested.
fn reduce_by(
    f: &Polynomial,
    basis: &[Element],
    order: MonomialOrder,
    mut quotients: Option<&mut Vec<Polynomial>>,
    keep_leading: bool,
) -> Polynomial {
    let mut work = Work::new(order, f);
    let mut rem = Polynomial::zero(f.vars());
    let mut first = keep_leading;
    while let Some((m, mut c)) = work.pop_leading() {
        if first {
            first = false;
            rem.add_term(m, c);
            continue;
        }
        loop {
            let candidates = || basis.iter().enumerate().filter(|(_, e)| e.lm().divides(&m));
            let exact = candidates().find(|(_, e)| (&c % e.lc()).is_zero());
            let chosen = exact.map(|(i, e)| (i, e, &c / e.lc())).or_else(|| {
                candidates()
                    .find(|(_, e)| e.lc().abs() <= c.abs())
                    .map(|(i, e)| (i, e, nearest_quotient(&c, e.lc())))
            });
            let Some((i, e, q)) = chosen else {
                rem.add_term(m, c);
                break;
            };
            let shift = m.div(e.lm()).unwrap();
            work.sub_scaled(&e.terms[1..], &shift, &q);
            c -= &q * e.lc();
            if let Some(qs) = quotients.as_deref_mut() {
                qs[i].add_term(shift, q);
            }
            if c.is_zero() {
                break;
            }
        }
    }
    rem
}

fn combine_cofactors(parts: &[(&[Polynomial], &Monomial, &BigInt)], n: usize, vars: &VariableSet) -> Vec<Polynomial> {
    (0..n)
        .map(|j| {
            let mut acc = Polynomial::zero(vars);
            for (cof, m, c) in parts {
                acc = &acc + &cof[j].mul_term(m, c);
            }
            acc
        })
        .collect()
}

/// `cof - sum_k quotients[k] * basis[k].cofactors`
fn subtract_quotients(cof: Vec<Polynomial>, quotients: &[Polynomial], basis: &[Element]) -> Vec<Polynomial> {
    cof.into_iter()
        .enumerate()
        .map(|(j, mut acc)| {
            for (q, e) in quotients.iter().zip(basis) {
                if !q.is_zero() {
                    acc = &acc - &(q * &e.cofactors[j]);
                }
            }
            acc
        })
        .collect()
}

/// A completed strong Groebner basis together with the cofactor matrix that
/// expresses each element over the original generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: VariableSet,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    elements: Vec<Element>,
}

impl GroebnerBasis {
    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Row `i` expresses element `i` over [`GroebnerBasis::generators`].
    pub fn cofactor_matrix(&self) -> Vec<Vec<Polynomial>> {
        self.elements.iter().map(|e| e.cofactors.clone()).collect()
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, BigInt)> {
        self.elements.iter().map(Element::lt).collect()
    }

    /// Full reduction with the Euclidean coefficient rule. The result is
    /// zero exactly when `f` lies in the ideal.
    pub fn reduce_full(&self, f: &Polynomial) -> Polynomial {
        reduce_by(f, &self.elements, self.order, None, false)
    }

    /// Full reduction that also returns the quotient by each basis element:
    /// `f = sum(quotients[i] * elements[i]) + remainder`.
    pub fn reduce_with_quotients(&self, f: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
        let mut qs = vec![Polynomial::zero(&self.vars); self.elements.len()];
        let r = reduce_by(f, &self.elements, self.order, Some(&mut qs), false);
        (r, qs)
    }

    pub fn is_member(&self, f: &Polynomial) -> MembershipCertificate {
        let (r, qs) = self.reduce_with_quotients(f);
        if !r.is_zero() {
            return MembershipCertificate {
                member: false,
                cofactors: None,
            };
        }
        let zero = vec![Polynomial::zero(&self.vars); self.generators.len()];
        let cofactors = subtract_quotients(zero, &qs, &self.elements)
            .into_iter()
            .map(|c| -c)
            .collect();
        MembershipCertificate {
            member: true,
            cofactors: Some(cofactors),
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce_full(f).is_zero()
    }

    /// Every pairwise S-polynomial and GCD-polynomial reduces to zero.
    pub fn is_complete(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (f, g) = (&self.elements[i].poly, &self.elements[j].poly);
                self.contains(&s_polynomial(f, g, self.order).unwrap())
                    && self.contains(&gcd_polynomial(f, g, self.order).unwrap())
            })
        })
    }

    /// Each element equals its cofactor combination of the generators.
    pub fn cofactors_are_sound(&self) -> bool {
        self.elements.iter().all(|e| {
            let mut acc = Polynomial::zero(&self.vars);
            for (c, g) in e.cofactors.iter().zip(&self.generators) {
                acc = &acc + &(c * g);
            }
            acc == e.poly
        })
    }
}

/// Strong Groebner basis of the ideal generated by `generators`.
///
/// Pairs are processed smallest-lcm first, ties in creation order. The
/// final basis has redundant elements removed, tails reduced and positive
/// leading coefficients.
pub fn buchberger_z(generators: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let vars = generators
        .first()
        .map(|g| g.vars().clone())
        .ok_or_else(|| Error::InvalidArgument("at least one generator is required".into()))?;
    for g in generators {
        if g.vars() != &vars {
            return Err(Error::VariableSetMismatch {
                left: vars.to_string(),
                right: g.vars().to_string(),
            });
        }
    }
    let n = generators.len();
    let unit = |j: usize| -> Vec<Polynomial> {
        (0..n)
            .map(|k| {
                if k == j {
                    Polynomial::one(&vars)
                } else {
                    Polynomial::zero(&vars)
                }
            })
            .collect()
    };

    let mut basis: Vec<Element> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq = 0usize;
    let mut add = |basis: &mut Vec<Element>, pairs: &mut Vec<Pair>, e: Element| {
        let j = basis.len();
        for (i, other) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j,
                lcm: other.lm().lcm(e.lm()),
                seq,
            });
            seq += 1;
        }
        basis.push(e);
    };

    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut qs = vec![Polynomial::zero(&vars); basis.len()];
        let r = reduce_by(g, &basis, order, Some(&mut qs), false);
        if !r.is_zero() {
            let cof = subtract_quotients(unit(j), &qs, &basis);
            let e = Element::new(r, cof, order);
            add(&mut basis, &mut pairs, e);
        }
    }

    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .compare(&pairs[a].lcm, &pairs[b].lcm)
                    .then(pairs[a].seq.cmp(&pairs[b].seq))
            })
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(pick);
        let (lt_i, lt_j) = (basis[i].lt(), basis[j].lt());

        let mut candidates = Vec::with_capacity(2);
        let ((m1, c1), (m2, c2)) = s_multipliers(&lt_i, &lt_j);
        let neg_c2 = -&c2;
        candidates.push([(m1, c1), (m2, neg_c2)]);
        let divisible = (lt_i.1.clone() % &lt_j.1).is_zero() || (lt_j.1.clone() % &lt_i.1).is_zero();
        if !divisible {
            let ((m1, a), (m2, b)) = g_multipliers(&lt_i, &lt_j);
            candidates.push([(m1, a), (m2, b)]);
        }

        for [(m1, c1), (m2, c2)] in candidates {
            let poly = basis[i].poly.mul_term(&m1, &c1) + basis[j].poly.mul_term(&m2, &c2);
            let mut qs = vec![Polynomial::zero(&vars); basis.len()];
            let r = reduce_by(&poly, &basis, order, Some(&mut qs), false);
            if r.is_zero() {
                continue;
            }
            let cof = combine_cofactors(
                &[(&basis[i].cofactors, &m1, &c1), (&basis[j].cofactors, &m2, &c2)],
                n,
                &vars,
            );
            let cof = subtract_quotients(cof, &qs, &basis);
            let e = Element::new(r, cof, order);
            add(&mut basis, &mut pairs, e);
        }
    }

    Ok(GroebnerBasis {
        elements: interreduce(basis, order, &vars),
        vars,
        order,
        generators: generators.to_vec(),
    })
}

fn interreduce(basis: Vec<Element>, order: MonomialOrder, vars: &VariableSet) -> Vec<Element> {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let same = basis[i].lm() == basis[j].lm() && basis[i].lc().abs() == basis[j].lc().abs();
            if basis[j].strongly_divides(&basis[i]) && (!same || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Element> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    for i in 0..kept.len() {
        let mut qs = vec![Polynomial::zero(vars); kept.len()];
        let r = reduce_by(&kept[i].poly, &kept, order, Some(&mut qs), true);
        if qs.iter().all(Polynomial::is_zero) {
            continue;
        }
        let cof = subtract_quotients(kept[i].cofactors.clone(), &qs, &kept);
        kept[i] = Element::new(r, cof, order);
    }
    kept.sort_by(|a, b| order.compare(a.lm(), b.lm()).then_with(|| a.lc().cmp(b.lc())));
    kept
}

/// Whether the two generator lists span the same ideal.
pub fn ideal_equal(gens1: &[Polynomial], gens2: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    let nonzero = |g: &[Polynomial]| g.iter().any(|p| !p.is_zero());
    match (nonzero(gens1), nonzero(gens2)) {
        (false, false) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        _ => {}
    }
    let b1 = buchberger_z(gens1, order)?;
    let b2 = buchberger_z(gens2, order)?;
    if b1.vars() != b2.vars() {
        return Err(Error::VariableSetMismatch {
            left: b1.vars().to_string(),
            right: b2.vars().to_string(),
        });
    }
    Ok(gens1.iter().all(|g| b2.contains(g)) && gens2.iter().all(|g| b1.contains(g)))
}
