//! Independent check by integer linear algebra.
//!
//! `T_N` is signed-tileable inside a finite window iff the indicator vector
//! of `T_N` is an integer combination of the tribone placements that fit in
//! the window. The window is `T_N` grown by `margin` rows on every side.
//! Solvability is decided exactly: the placement vectors are brought into
//! echelon (Hermite) form one at a time with unimodular row operations, and
//! the target is then reduced against the echelon basis.
//!
//! For the symmetric flavour the unknowns are rotation orbits of placements
//! and, since both the orbits and the target are invariant, one equation
//! per cell orbit suffices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hexlattice::{triangle_t, Cell, Placement, TriboneType};

pub const DEFAULT_MARGIN: u32 = 3;
pub const DEFAULT_COLUMN_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub column_cap: usize,
    /// Also compute the invariant factors of the window's cokernel (a
    /// diagnostic, skipped above `cokernel_cap` basis vectors).
    pub cokernel: bool,
    pub cokernel_cap: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            column_cap: DEFAULT_COLUMN_CAP,
            cokernel: false,
            cokernel_cap: 300,
        }
    }
}

/// `Z^rows / span(columns)` for the truncated system. Not the tile homology
/// group of the whole lattice, only its window surrogate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cokernel {
    pub free_rank: usize,
    /// Invariant factors greater than 1, in divisibility order.
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: u32,
    pub symmetric: bool,
    pub window_margin: u32,
    pub solvable: bool,
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cokernel: Option<Cokernel>,
}

type Sparse<T> = Vec<(u32, T)>;

/// `a*u + b*v`; `None` on overflow.
fn combine<T>(a: &T, u: &Sparse<T>, b: &T, v: &Sparse<T>) -> Option<Sparse<T>>
where
    T: Integer + Clone + CheckedMul + CheckedAdd,
{
    let mut out = Vec::with_capacity(u.len().max(v.len()));
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let take_u = j >= v.len() || (i < u.len() && u[i].0 < v[j].0);
        let take_v = i >= u.len() || (j < v.len() && v[j].0 < u[i].0);
        let (idx, val) = if take_u {
            i += 1;
            (u[i - 1].0, a.checked_mul(&u[i - 1].1)?)
        } else if take_v {
            j += 1;
            (v[j - 1].0, b.checked_mul(&v[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            let x = a.checked_mul(&u[i - 1].1)?;
            let y = b.checked_mul(&v[j - 1].1)?;
            (u[i - 1].0, x.checked_add(&y)?)
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    Some(out)
}

/// Echelon basis of a lattice, indexed by pivot row.
struct Echelon<T> {
    rows: HashMap<u32, Sparse<T>>,
}

impl<T> Echelon<T>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedAdd + CheckedSub,
{
    fn new() -> Self {
        Echelon { rows: HashMap::new() }
    }

    fn insert(&mut self, mut v: Sparse<T>) -> Option<()> {
        let one = T::one();
        loop {
            let Some((p, b)) = v.first().cloned() else {
                return Some(());
            };
            let Some(u) = self.rows.get(&p) else {
                if b.is_negative() {
                    v = combine(&T::zero(), &v, &(T::zero() - one.clone()), &v)?;
                }
                self.rows.insert(p, v);
                return Some(());
            };
            let a = u[0].1.clone();
            if b.is_multiple_of(&a) {
                let q = b.div_floor(&a);
                v = combine(&one, &v, &(T::zero() - q), u)?;
            } else {
                let e = a.extended_gcd(&b);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let new_u = combine(&s, u, &t, &v)?;
                let new_v = combine(&a.div_floor(&g), &v, &(T::zero() - b.div_floor(&g)), u)?;
                let new_u = if new_u[0].1.is_negative() {
                    combine(&T::zero(), &new_u, &(T::zero() - one.clone()), &new_u)?
                } else {
                    new_u
                };
                self.rows.insert(p, new_u);
                v = new_v;
            }
        }
    }

    /// Whether `v` lies in the lattice; `None` on overflow.
    fn contains(&self, mut v: Sparse<T>) -> Option<bool> {
        let one = T::one();
        while let Some((p, b)) = v.first().cloned() {
            let Some(u) = self.rows.get(&p) else {
                return Some(false);
            };
            let a = &u[0].1;
            if !b.is_multiple_of(a) {
                return Some(false);
            }
            v = combine(&one, &v, &(T::zero() - b.div_floor(a)), u)?;
        }
        Some(true)
    }
}

struct System {
    rows: usize,
    columns: Vec<Sparse<i64>>,
    target: Sparse<i64>,
}

fn build_system(n: u32, symmetric: bool, margin: u32, cap: usize) -> Result<System> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if symmetric && n % 3 == 1 {
        return Err(Error::FixedCell { n });
    }
    let region = triangle_t(n)?;
    let window = region.dilate(margin);
    let mut index: HashMap<Cell, u32> = HashMap::new();
    for c in window.cells() {
        if !symmetric || c.sector_coords().2 == 0 {
            let k = index.len() as u32;
            index.insert(c, k);
        }
    }
    let to_vec = |cells: &mut dyn Iterator<Item = Cell>| -> Sparse<i64> {
        let mut acc: Vec<(u32, i64)> = Vec::new();
        for c in cells {
            if let Some(&k) = index.get(&c) {
                acc.push((k, 1));
            }
        }
        acc.sort_unstable();
        let mut out: Sparse<i64> = Vec::new();
        for (k, v) in acc {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 += v,
                _ => out.push((k, v)),
            }
        }
        out
    };

    let mut columns = Vec::new();
    for center in window.cells() {
        for kind in TriboneType::ALL {
            let p = Placement::new(kind, center, 1);
            if !p.cells().iter().all(|&c| window.contains(c)) {
                continue;
            }
            if symmetric {
                let orbit = [p, p.rotate(), p.rotate().rotate()];
                let rep = orbit.iter().map(|q| (q.kind, q.center)).min().unwrap();
                if rep != (p.kind, p.center) {
                    continue;
                }
                columns.push(to_vec(&mut orbit.iter().flat_map(|q| q.cells())));
            } else {
                columns.push(to_vec(&mut p.cells().into_iter()));
            }
            if columns.len() > cap {
                return Err(Error::DimensionCap {
                    columns: columns.len(),
                    cap,
                });
            }
        }
    }
    let target = to_vec(&mut region.cells().into_iter());
    Ok(System {
        rows: index.len(),
        columns,
        target,
    })
}

fn lift<T: From<i64>>(v: &Sparse<i64>) -> Sparse<T> {
    v.iter().map(|&(k, x)| (k, T::from(x))).collect()
}

fn solve<T>(sys: &System) -> Option<(bool, Echelon<T>)>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedAdd + CheckedSub + From<i64>,
{
    let mut ech = Echelon::new();
    for col in &sys.columns {
        ech.insert(lift(col))?;
    }
    let ok = ech.contains(lift(&sys.target))?;
    Some((ok, ech))
}

fn to_big<T: Into<BigInt> + Clone>(ech: Echelon<T>) -> Vec<Sparse<BigInt>> {
    ech.rows
        .into_values()
        .map(|v| v.into_iter().map(|(k, x)| (k, x.into())).collect())
        .collect()
}

/// Invariant factors of the integer matrix with the given rows.
fn smith_diagonal(rows: &[Sparse<BigInt>], width: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); width];
            for (k, x) in r {
                d[*k as usize] = x.clone();
            }
            d
        })
        .collect();
    let (h, w) = (m.len(), width);
    let mut diag = Vec::new();
    for t in 0..h.min(w) {
        // smallest nonzero entry of the remaining block as pivot
        let Some((pi, pj)) = (t..h)
            .flat_map(|i| (t..w).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by(|a, b| m[a.0][a.1].abs().cmp(&m[b.0][b.1].abs()))
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..h {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    let pivot_row = m[t].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                    if !m[i][t].is_zero() {
                        done = false;
                        if m[i][t].abs() < m[t][t].abs() {
                            m.swap(t, i);
                        }
                    }
                }
            }
            for j in t + 1..w {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    for row in m.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                    if !m[t][j].is_zero() {
                        done = false;
                        if m[t][j].abs() < m[t][t].abs() {
                            for row in m.iter_mut() {
                                row.swap(t, j);
                            }
                        }
                    }
                }
            }
            if done {
                break;
            }
        }
        diag.push(m[t][t].abs());
    }
    // divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

pub fn oracle_with(n: u32, symmetric: bool, margin: u32, opts: &OracleOptions) -> Result<OracleReport> {
    let sys = build_system(n, symmetric, margin, opts.column_cap)?;
    let (solvable, basis) = match solve::<i128>(&sys) {
        Some((ok, ech)) => (ok, to_big(ech)),
        None => {
            let (ok, ech) = solve::<BigInt>(&sys).expect("big integers do not overflow");
            (ok, to_big(ech))
        }
    };
    let rank = basis.len();
    let cokernel = (opts.cokernel && rank <= opts.cokernel_cap).then(|| {
        let diag = smith_diagonal(&basis, sys.rows);
        Cokernel {
            free_rank: sys.rows - diag.len(),
            torsion: diag.iter().filter(|d| !d.is_one()).map(|d| d.to_string()).collect(),
        }
    });
    Ok(OracleReport {
        n,
        symmetric,
        window_margin: margin,
        solvable,
        rows: sys.rows,
        columns: sys.columns.len(),
        rank,
        cokernel,
    })
}

pub fn oracle_signed(n: u32, margin: u32) -> Result<OracleReport> {
    oracle_with(n, false, margin, &OracleOptions::default())
}

pub fn oracle_symmetric(n: u32, margin: u32) -> Result<OracleReport> {
    oracle_with(n, true, margin, &OracleOptions::default())
}

/// Margins `0, 1, ..` up to `max_margin`, stopping once two consecutive
/// margins are solvable.
pub fn oracle_sweep(n: u32, symmetric: bool, max_margin: u32, opts: &OracleOptions) -> Result<Vec<OracleReport>> {
    let mut out: Vec<OracleReport> = Vec::new();
    for m in 0..=max_margin {
        let r = oracle_with(n, symmetric, m, opts)?;
        let stable = r.solvable && out.last().is_some_and(|p| p.solvable);
        out.push(r);
        if stable {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[(u32, i64)]) -> Sparse<i64> {
        v.to_vec()
    }

    #[test]
    fn echelon_membership() {
        let mut e: Echelon<i64> = Echelon::new();
        e.insert(sp(&[(0, 2), (1, 1)])).unwrap();
        e.insert(sp(&[(0, 3)])).unwrap();
        // lattice spanned by (2,1), (3,0) has index 3 in Z^2
        assert_eq!(e.contains(sp(&[(0, 1), (1, 2)])), Some(true));
        assert_eq!(e.contains(sp(&[(1, 1)])), Some(false));
        assert_eq!(e.contains(sp(&[(1, 3)])), Some(true));
        assert_eq!(e.contains(sp(&[])), Some(true));
    }

    #[test]
    fn overflow_is_reported() {
        let mut e: Echelon<i64> = Echelon::new();
        e.insert(sp(&[(0, i64::MAX)])).unwrap();
        assert_eq!(e.insert(sp(&[(0, i64::MAX - 1), (1, i64::MAX)])), None);
    }

    #[test]
    fn smith_of_small_matrix() {
        let rows: Vec<Sparse<BigInt>> = vec![vec![(0, 2.into()), (1, 4.into())], vec![(0, 6.into()), (1, 8.into())]];
        assert_eq!(smith_diagonal(&rows, 2), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn small_oracle_runs() {
        assert!(!oracle_signed(3, 0).unwrap().solvable);
        assert!(oracle_signed(8, 2).unwrap().solvable);
        assert!(!oracle_signed(7, 2).unwrap().solvable);
        assert!(!oracle_symmetric(8, 3).unwrap().solvable);
        assert!(matches!(oracle_symmetric(10, 0), Err(Error::FixedCell { n: 10 })));
        let capped = oracle_with(
            8,
            false,
            2,
            &OracleOptions {
                column_cap: 10,
                ..Default::default()
            },
        );
        assert!(matches!(capped, Err(Error::DimensionCap { cap: 10, .. })));
    }

    #[test]
    fn cokernel_of_a_single_tribone_window() {
        let opts = OracleOptions {
            cokernel: true,
            ..Default::default()
        };
        // T_1 in a window of side 1: one cell, no placements
        let r = oracle_with(1, false, 0, &opts).unwrap();
        assert_eq!(r.cokernel.unwrap().free_rank, 1);
        let r = oracle_with(2, false, 0, &opts).unwrap();
        assert_eq!((r.rows, r.columns), (3, 0));
    }
}
