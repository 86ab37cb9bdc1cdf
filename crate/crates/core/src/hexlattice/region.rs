//! Triangular regions and their integer-point transforms.
//!
//! A triangle of side `n` is the staircase `{0 <= j' <= i' <= n-1}` placed
//! in the axial chart either as is ([`Triangle::Delta`]) or point-reflected
//! ([`Triangle::Nabla`]). Point reflection maps each tribone to a tribone of
//! the same axis, so the staircase polynomial `Delta_n` in `Z[x, y]` is a
//! faithful chart for the tiling problem of either shape.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Cell;
use crate::error::{Error, Result};
use crate::polynomial::{Monomial, Polynomial, VariableSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Triangle {
    /// Cells `(i0 + i', j0 + j')`.
    Delta { i0: i64, j0: i64, n: u32 },
    /// Cells `(i0 - i', j0 - j')`.
    Nabla { i0: i64, j0: i64, n: u32 },
}

impl Triangle {
    pub fn side(&self) -> u32 {
        match *self {
            Triangle::Delta { n, .. } | Triangle::Nabla { n, .. } => n,
        }
    }

    /// Maps staircase coordinates `0 <= j' <= i' < n` to the lattice.
    pub fn place(&self, di: i64, dj: i64) -> Cell {
        match *self {
            Triangle::Delta { i0, j0, .. } => Cell::axial(i0 + di, j0 + dj),
            Triangle::Nabla { i0, j0, .. } => Cell::axial(i0 - di, j0 - dj),
        }
    }

    /// Staircase coordinates of a lattice cell (not necessarily inside).
    pub fn local(&self, c: Cell) -> (i64, i64) {
        match *self {
            Triangle::Delta { i0, j0, .. } => (c.i() - i0, c.j() - j0),
            Triangle::Nabla { i0, j0, .. } => (i0 - c.i(), j0 - c.j()),
        }
    }

    /// Whether staircase chart moves map to lattice moves with a sign flip.
    pub fn reflected(&self) -> bool {
        matches!(self, Triangle::Nabla { .. })
    }

    pub fn contains(&self, c: Cell) -> bool {
        let (di, dj) = self.local(c);
        0 <= dj && dj <= di && di < i64::from(self.side())
    }

    pub fn cells(&self) -> Vec<Cell> {
        let n = i64::from(self.side());
        let mut out = Vec::with_capacity((n * (n + 1) / 2) as usize);
        for di in 0..n {
            for dj in 0..=di {
                out.push(self.place(di, dj));
            }
        }
        out
    }

    /// The triangle grown by `m` rows on each of its three sides.
    pub fn dilate(&self, m: u32) -> Triangle {
        let mi = i64::from(m);
        match *self {
            Triangle::Delta { i0, j0, n } => Triangle::Delta {
                i0: i0 - 2 * mi,
                j0: j0 - mi,
                n: n + 3 * m,
            },
            Triangle::Nabla { i0, j0, n } => Triangle::Nabla {
                i0: i0 + 2 * mi,
                j0: j0 + mi,
                n: n + 3 * m,
            },
        }
    }
}

/// The triangle `T_n` with `n` cells per side. For `n` not congruent to 1
/// mod 3 it is invariant under the rotation; for `n = 3k + 1` the invariant
/// triangle would be centred on a rotation-fixed hexagon, which this
/// lattice lacks, and a translate is returned instead.
pub fn triangle_t(n: u32) -> Result<Triangle> {
    if n == 0 {
        return Err(Error::InvalidArgument("triangle side must be positive".into()));
    }
    let k = i64::from((n + 1) / 3);
    Ok(match n % 3 {
        2 => Triangle::Delta {
            i0: -(2 * k - 1),
            j0: -k,
            n,
        },
        0 => Triangle::Nabla {
            i0: 2 * k - 1,
            j0: k - 1,
            n,
        },
        _ => {
            let k = i64::from(n / 3);
            Triangle::Delta { i0: -k, j0: -k, n }
        }
    })
}

/// A finite set of cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub cells: BTreeSet<Cell>,
}

impl Region {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Region {
            n: None,
            cells: cells.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    /// Sum of the cell monomials in `a, b, c`.
    pub fn poly(&self) -> Polynomial {
        Polynomial::from_terms(&VariableSet::abc(), self.cells.iter().map(|c| (c.monomial(), 1)))
    }
}

pub fn region_t(n: u32) -> Result<Region> {
    let t = triangle_t(n)?;
    Ok(Region {
        n: Some(n),
        cells: t.cells().into_iter().collect(),
    })
}

fn fixed_cell(n: u32) -> Result<()> {
    if n % 3 == 1 {
        Err(Error::FixedCell { n })
    } else if n < 2 {
        Err(Error::InvalidArgument("side must be at least 2".into()))
    } else {
        Ok(())
    }
}

/// The cells of `T_n` in the cone `{a x^p y^q : p, q >= 0}`. The other two
/// thirds of `T_n` are its rotations.
pub fn sector_cells(n: u32) -> Result<Vec<Cell>> {
    fixed_cell(n)?;
    let mut out = Vec::new();
    if n % 3 == 2 {
        let k = i64::from((n + 1) / 3);
        for p in 0..k {
            for q in 0..k + p {
                out.push(Cell::axial(p, q));
            }
        }
    } else {
        let k = i64::from(n / 3);
        for q in 0..k {
            for p in 0..=k + q {
                out.push(Cell::axial(p, q));
            }
        }
    }
    Ok(out)
}

pub fn sector_poly(n: u32) -> Result<Polynomial> {
    let cells = sector_cells(n)?;
    Ok(Polynomial::from_terms(
        &VariableSet::abc(),
        cells.iter().map(|c| (c.monomial(), 1)),
    ))
}

fn xy(terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(
        &VariableSet::xy(),
        terms.iter().map(|&(i, j, c)| (Monomial::new(vec![i, j]), c)),
    )
}

fn delta2() -> Polynomial {
    xy(&[(0, 0, 1), (1, 0, 1), (1, 1, 1)])
}

fn nabla2() -> Polynomial {
    xy(&[(0, 0, 1), (0, 1, 1), (1, 1, 1)])
}

/// Small representative of the sector class, written as `a * g(x, y)`; this
/// returns `g`.
pub fn reduced_sector_form_xy(n: u32) -> Result<Polynomial> {
    fixed_cell(n)?;
    let one = xy(&[(0, 0, 1)]);
    let x = xy(&[(1, 0, 1)]);
    let x2 = xy(&[(2, 0, 1)]);
    let xy1 = xy(&[(1, 1, 1)]);
    let xy2 = xy(&[(1, 2, 1)]);
    let x2y2 = xy(&[(2, 2, 1)]);
    if n % 3 == 2 {
        let k = (n + 1) / 3;
        let d = BigInt::from(k / 3);
        let dd = delta2().scale(&d);
        Ok(match k % 3 {
            0 => &x * &dd,
            1 => &one + &(&xy1 * &dd),
            _ => &x2y2 + &(&xy2 * &(&dd + &one)),
        })
    } else {
        let k = n / 3;
        Ok(match k % 3 {
            0 => nabla2().scale(&BigInt::from(k / 3)),
            1 => &one + &(&x * &(&nabla2().scale(&BigInt::from(k / 3)) + &one)),
            _ => &x2y2 + &(&x2 * &nabla2().scale(&BigInt::from((k + 1) / 3))),
        })
    }
}

pub fn reduced_sector_form(n: u32) -> Result<Polynomial> {
    Ok(xy_to_abc(&reduced_sector_form_xy(n)?))
}

/// `x^i y^j -> a x^i y^j` as a polynomial in `a, b, c`.
pub fn xy_to_abc(g: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        &VariableSet::abc(),
        g.terms().map(|(m, c)| {
            let e = m.exponents();
            (Cell::axial(i64::from(e[0]), i64::from(e[1])).monomial(), c.clone())
        }),
    )
}

/// Inverse of [`xy_to_abc`]; every term must be a cell `a x^i y^j` with
/// `i, j >= 0`.
pub fn abc_to_xy(f: &Polynomial) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let cell = Cell::from_monomial(m)?;
        if cell.i() < 0 || cell.j() < 0 {
            return Err(Error::InvalidArgument(format!("cell {cell} lies outside the xy cone")));
        }
        terms.push((Monomial::new(vec![cell.i() as u32, cell.j() as u32]), c.clone()));
    }
    Ok(Polynomial::from_terms(&VariableSet::xy(), terms))
}

/// The staircase transform `Delta_n = sum x^i y^j` over `0 <= j <= i < n`.
pub fn region_xy(n: u32) -> Polynomial {
    Polynomial::from_exponents(
        &VariableSet::xy(),
        (0..n).flat_map(|i| (0..=i).map(move |j| vec![i, j])),
    )
}

/// Families with a closed form modulo the checkerboard ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// `L_k = 1 + x + .. + x^(k-1)`
    L,
    /// `L_k(x) * L_k(y)`
    Square,
    /// `Delta_k`, see [`region_xy`]
    Delta,
    /// the mirror `sum x^i y^j` over `0 <= i <= j < k`
    Nabla,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] = [ClassKind::L, ClassKind::Square, ClassKind::Delta, ClassKind::Nabla];
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::L => "L",
            ClassKind::Square => "square",
            ClassKind::Delta => "delta",
            ClassKind::Nabla => "nabla",
        })
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(ClassKind::L),
            "square" => Ok(ClassKind::Square),
            "delta" => Ok(ClassKind::Delta),
            "nabla" => Ok(ClassKind::Nabla),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// The enumerated polynomial of a family.
pub fn enumerated_class(kind: ClassKind, k: u32) -> Polynomial {
    let vars = VariableSet::xy();
    match kind {
        ClassKind::L => Polynomial::from_exponents(&vars, (0..k).map(|i| vec![i, 0])),
        ClassKind::Square => Polynomial::from_exponents(&vars, (0..k).flat_map(|i| (0..k).map(move |j| vec![i, j]))),
        ClassKind::Delta => region_xy(k),
        ClassKind::Nabla => Polynomial::from_exponents(&vars, (0..k).flat_map(|j| (0..=j).map(move |i| vec![i, j]))),
    }
}

/// Representative of the family member modulo the checkerboard ideal,
/// by `k mod 3`.
pub fn closed_form_class(kind: ClassKind, k: u32) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let zero = Polynomial::zero(&VariableSet::xy());
    let one = xy(&[(0, 0, 1)]);
    Ok(match kind {
        ClassKind::L => [zero, one, xy(&[(0, 0, 1), (1, 0, 1)])][(k % 3) as usize].clone(),
        ClassKind::Square => [zero, one, xy(&[(2, 2, 1)])][(k % 3) as usize].clone(),
        ClassKind::Delta | ClassKind::Nabla => {
            let base = if kind == ClassKind::Delta { delta2() } else { nabla2() };
            let n = BigInt::from((k + 1) / 3);
            let scaled = base.scale(&n);
            if k % 3 == 1 {
                &scaled + &one
            } else {
                scaled
            }
        }
    })
}
