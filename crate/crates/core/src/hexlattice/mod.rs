//! Cells, tribones and triangular regions of the hexagonal lattice.
//!
//! Cells are the black dots of the `abc` lattice, i.e. normalized monomials
//! of grading 1 in `Q = Z[a,b,c]/<abc - 1>`. Every such monomial is
//! `a * x^i * y^j` for a unique pair of integers with `x = ac^2`, `y = a^2b`,
//! and that pair is the internal (axial) representation. `z = b^2c` is the
//! third translation direction; since `xyz = 1` it moves by `(-1, -1)`.
//!
//! The 120-degree rotation `a -> b -> c -> a` permutes the cells without
//! fixed points. Its three images of the cone `{a x^p y^q : p, q >= 0}`
//! partition the lattice, which gives the external chart `[p, q, sector]`:
//! the cell `rot^sector(a x^p y^q)`.

mod region;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomial::{Monomial, Polynomial, VariableSet};

pub use region::{
    abc_to_xy, closed_form_class, enumerated_class, reduced_sector_form, reduced_sector_form_xy, region_t, region_xy,
    sector_cells, sector_poly, triangle_t, xy_to_abc, ClassKind, Region, Triangle,
};

/// The monomial `abc`.
pub fn abc_relation() -> Monomial {
    Monomial::new(vec![1, 1, 1])
}

/// Total degree mod 3 of a monomial in `a, b, c`; unchanged by normalization.
pub fn grading(m: &Monomial) -> u8 {
    (m.degree() % 3) as u8
}

/// `a -> b -> c -> a`, applied termwise.
pub fn rotate120(f: &Polynomial) -> Polynomial {
    f.permute_vars(&[1, 2, 0]).normalize_quotient(&abc_relation())
}

/// A black dot, stored as the exponents `(i, j)` of `a x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    i: i64,
    j: i64,
}

impl Cell {
    /// The cell `a` (origin of the axial chart).
    pub const ORIGIN: Cell = Cell { i: 0, j: 0 };

    pub fn axial(i: i64, j: i64) -> Self {
        Cell { i, j }
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// `rot^sector(a x^p y^q)`.
    pub fn from_sector(p: i64, q: i64, sector: u8) -> Result<Self> {
        if p < 0 || q < 0 || sector > 2 {
            return Err(Error::InvalidArgument(format!(
                "sector coordinates need p, q >= 0 and sector < 3, got [{p}, {q}, {sector}]"
            )));
        }
        let mut c = Cell { i: p, j: q };
        for _ in 0..sector {
            c = c.rotate();
        }
        Ok(c)
    }

    /// Inverse of [`Cell::from_sector`].
    pub fn sector_coords(&self) -> (i64, i64, u8) {
        let Cell { i, j } = *self;
        if i >= 0 && j >= 0 {
            (i, j, 0)
        } else if i <= -1 && j >= i {
            (j - i, -i - 1, 1)
        } else {
            (-j - 1, i - j - 1, 2)
        }
    }

    /// One step of the 120-degree rotation.
    pub fn rotate(&self) -> Cell {
        Cell {
            i: -(self.j + 1),
            j: self.i - self.j - 1,
        }
    }

    pub fn translate(&self, di: i64, dj: i64) -> Cell {
        Cell {
            i: self.i + di,
            j: self.j + dj,
        }
    }

    /// Normalized exponents of the cell in `a, b, c`.
    pub fn monomial(&self) -> Monomial {
        let e = [1 + self.i + 2 * self.j, self.j, 2 * self.i];
        let m = *e.iter().min().unwrap();
        Monomial::new(
            e.iter()
                .map(|&v| u32::try_from(v - m).expect("cell exponent fits u32"))
                .collect(),
        )
    }

    /// The cell of a grading-1 monomial in `a, b, c`.
    pub fn from_monomial(m: &Monomial) -> Result<Self> {
        if m.arity() != 3 {
            return Err(Error::InvalidArgument("cells are monomials in a, b, c".into()));
        }
        if grading(m) != 1 {
            return Err(Error::InvalidArgument(format!(
                "monomial with exponents {:?} has grading {}, cells have grading 1",
                m.exponents(),
                grading(m)
            )));
        }
        let [al, be, ga] = [0, 1, 2].map(|k| i64::from(m.exponents()[k]));
        let i = (al - 2 * be + ga - 1) / 3;
        let j = (2 * al - be - ga - 2) / 3;
        Ok(Cell { i, j })
    }

    pub fn poly(&self) -> Polynomial {
        Polynomial::term(&VariableSet::abc(), self.monomial(), 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, s) = self.sector_coords();
        write!(f, "[{p},{q},{s}]")
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (p, q, sec) = self.sector_coords();
        (p, q, sec).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (p, q, sec) = <(i64, i64, u8)>::deserialize(d)?;
        Cell::from_sector(p, q, sec).map_err(serde::de::Error::custom)
    }
}

/// Axis of a three-in-line tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TriboneType {
    X,
    Y,
    Z,
}

impl TriboneType {
    pub const ALL: [TriboneType; 3] = [TriboneType::X, TriboneType::Y, TriboneType::Z];

    /// Axial step along the axis.
    pub fn step(self) -> (i64, i64) {
        match self {
            TriboneType::X => (1, 0),
            TriboneType::Y => (0, 1),
            TriboneType::Z => (-1, -1),
        }
    }

    /// The rotation carries x to y, y to z and z to x.
    pub fn rotate(self) -> Self {
        match self {
            TriboneType::X => TriboneType::Y,
            TriboneType::Y => TriboneType::Z,
            TriboneType::Z => TriboneType::X,
        }
    }

    pub fn cells(self, center: Cell) -> [Cell; 3] {
        let (di, dj) = self.step();
        [center.translate(-di, -dj), center, center.translate(di, dj)]
    }
}

impl fmt::Display for TriboneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriboneType::X => "X",
            TriboneType::Y => "Y",
            TriboneType::Z => "Z",
        })
    }
}

/// The tribone `center * (t^-1 + 1 + t)` as a polynomial in `a, b, c`.
pub fn tribone_poly(kind: TriboneType, center: Cell) -> Polynomial {
    let vars = VariableSet::abc();
    Polynomial::from_terms(&vars, kind.cells(center).map(|c| (c.monomial(), 1)))
}

/// A weighted tribone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Placement {
    #[serde(rename = "type")]
    pub kind: TriboneType,
    pub center: Cell,
    pub weight: i64,
}

impl Placement {
    pub fn new(kind: TriboneType, center: Cell, weight: i64) -> Self {
        Placement { kind, center, weight }
    }

    pub fn cells(&self) -> [Cell; 3] {
        self.kind.cells(self.center)
    }

    pub fn rotate(&self) -> Placement {
        Placement {
            kind: self.kind.rotate(),
            center: self.center.rotate(),
            weight: self.weight,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse;
    use proptest::prelude::*;

    fn abc(s: &str) -> Polynomial {
        parse(s, &VariableSet::abc()).unwrap()
    }

    #[test]
    fn grading_examples() {
        assert_eq!(grading(&Monomial::new(vec![1, 0, 0])), 1);
        assert_eq!(grading(&Monomial::new(vec![1, 0, 2])), 0);
        assert_eq!(grading(&Monomial::new(vec![2, 2, 0])), 1);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate120(&abc("a^2*b")), abc("b^2*c"));
        assert_eq!(rotate120(&abc("a*b*c")), abc("1"));
        assert_eq!(Cell::ORIGIN.rotate().poly(), abc("b"));
        assert_eq!(Cell::ORIGIN.rotate().rotate().poly(), abc("c"));
    }

    #[test]
    fn tribone_examples() {
        assert_eq!(tribone_poly(TriboneType::X, Cell::ORIGIN), abc("a^2*b^2 + a + a^2*c^2"));
        assert_eq!(tribone_poly(TriboneType::Y, Cell::ORIGIN), abc("c + a + a^3*b"));
        assert_eq!(tribone_poly(TriboneType::Z, Cell::ORIGIN), abc("a^3*c + a + b"));
    }

    #[test]
    fn translations_match_monomials() {
        let c = Cell::axial(2, -1);
        let x = abc("a*c^2");
        let y = abc("a^2*b");
        let z = abc("b^2*c");
        let r = abc_relation();
        assert_eq!(c.translate(1, 0).poly(), (&c.poly() * &x).normalize_quotient(&r));
        assert_eq!(c.translate(0, 1).poly(), (&c.poly() * &y).normalize_quotient(&r));
        assert_eq!(c.translate(-1, -1).poly(), (&c.poly() * &z).normalize_quotient(&r));
    }

    #[test]
    fn placement_json() {
        let p = Placement::new(TriboneType::Y, Cell::axial(-2, 1), -3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"type":"Y","center":[3,1,1],"weight":-3}"#);
        assert_eq!(serde_json::from_str::<Placement>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Cell>("[0,-1,0]").is_err());
    }

    proptest! {
        #[test]
        fn monomial_chart_round_trip(i in -40i64..40, j in -40i64..40) {
            let c = Cell::axial(i, j);
            let m = c.monomial();
            prop_assert_eq!(grading(&m), 1);
            prop_assert_eq!(Cell::from_monomial(&m).unwrap(), c);
            prop_assert_eq!(rotate120(&c.poly()), c.rotate().poly());
        }

        #[test]
        fn sector_chart_round_trip(i in -40i64..40, j in -40i64..40) {
            let c = Cell::axial(i, j);
            let (p, q, s) = c.sector_coords();
            prop_assert!(p >= 0 && q >= 0 && s < 3);
            prop_assert_eq!(Cell::from_sector(p, q, s).unwrap(), c);
            prop_assert_ne!(c.rotate(), c);
            prop_assert_eq!(c.rotate().rotate().rotate(), c);
            prop_assert_eq!(c.rotate().sector_coords(), (p, q, (s + 1) % 3));
        }

        #[test]
        fn rotation_has_order_three(ts in prop::collection::vec((0u32..6, 0u32..6, 0u32..6, -9i64..9), 0..6)) {
            let f = Polynomial::from_terms(&VariableSet::abc(), ts.into_iter().map(|(a, b, c, k)| (Monomial::new(vec![a, b, c]), k)))
                .normalize_quotient(&abc_relation());
            prop_assert_eq!(rotate120(&rotate120(&rotate120(&f))), f);
        }
    }
}
