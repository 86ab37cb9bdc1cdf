//! Explicit signed tilings and their verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{checkerboard_basis, symmetric_formula};
use crate::error::{Error, Result};
use crate::hexlattice::{region_t, region_xy, triangle_t, Cell, Placement, Region, Triangle, TriboneType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub placements: Vec<Placement>,
    pub region_n: u32,
    pub symmetric: bool,
}

impl Tiling {
    /// The placement multiset with coincident placements merged.
    pub fn merged(&self) -> BTreeMap<(TriboneType, Cell), i128> {
        let mut m = BTreeMap::new();
        for p in &self.placements {
            *m.entry((p.kind, p.center)).or_insert(0i128) += i128::from(p.weight);
        }
        m.retain(|_, w| *w != 0);
        m
    }
}

/// Signed tiling of any triangle from a membership certificate of the
/// staircase polynomial: the cofactor term `c x^i y^j` of the generator
/// with axis `t` is the tribone along `t` whose first cell is `(i, j)`.
pub fn tile_triangle(tri: Triangle) -> Result<Vec<Placement>> {
    let n = tri.side();
    let cert = checkerboard_basis().is_member(&region_xy(n));
    let cofactors = cert.cofactors.ok_or(Error::NotTileable { n, symmetric: false })?;
    let mut out = Vec::new();
    for (kind, cof) in TriboneType::ALL.into_iter().zip(&cofactors) {
        let (si, sj) = match kind {
            TriboneType::X => (1, 0),
            TriboneType::Y => (0, 1),
            TriboneType::Z => (1, 1),
        };
        for (m, c) in cof.terms() {
            let e = m.exponents();
            let center = tri.place(i64::from(e[0]) + si, i64::from(e[1]) + sj);
            let weight = i64::try_from(c)
                .map_err(|_| Error::InvalidArgument(format!("placement weight {c} does not fit 64 bits")))?;
            out.push(Placement::new(kind, center, weight));
        }
    }
    Ok(out)
}

/// A signed tiling of `T_n`, which exists iff `n mod 9` is 0 or 8.
pub fn extract_certificate(n: u32) -> Result<Tiling> {
    let tri = triangle_t(n)?;
    Ok(Tiling {
        placements: tile_triangle(tri)?,
        region_n: n,
        symmetric: false,
    })
}

/// A rotation-symmetric signed tiling of `T_n` for `n = 27r - 1` or `27r`.
///
/// One third of `T_n` is a `k x k` rhombus (`k = 9r`), paved by rows of
/// x-tribones, plus a triangle of side `k - 1` or `k`, which is plainly
/// tileable. The other two thirds are the rotated copies.
pub fn extract_symmetric_certificate(n: u32) -> Result<Tiling> {
    if n < 2 || !symmetric_formula(n) {
        return Err(if n % 3 == 1 {
            Error::FixedCell { n }
        } else {
            Error::NotTileable { n, symmetric: true }
        });
    }
    let (k, inner) = if n % 3 == 2 {
        let k = (n + 1) / 3;
        (
            k,
            Triangle::Delta {
                i0: 1,
                j0: i64::from(k),
                n: k - 1,
            },
        )
    } else {
        let k = n / 3;
        let ki = i64::from(k);
        (
            k,
            Triangle::Nabla {
                i0: 2 * ki - 1,
                j0: ki - 1,
                n: k,
            },
        )
    };
    let ki = i64::from(k);
    let mut sector = Vec::new();
    for j in 0..ki {
        for m in 0..ki / 3 {
            sector.push(Placement::new(TriboneType::X, Cell::axial(3 * m + 1, j), 1));
        }
    }
    sector.extend(tile_triangle(inner)?);
    let mut placements = sector.clone();
    let once: Vec<Placement> = sector.iter().map(Placement::rotate).collect();
    let twice: Vec<Placement> = once.iter().map(Placement::rotate).collect();
    placements.extend(once);
    placements.extend(twice);
    Ok(Tiling {
        placements,
        region_n: n,
        symmetric: true,
    })
}

/// Cell sums of `placements` equal 1 on `region` and 0 elsewhere.
pub fn verify_region(region: &Region, placements: &[Placement]) -> bool {
    let mut sums: BTreeMap<Cell, i128> = BTreeMap::new();
    for p in placements {
        for c in p.cells() {
            *sums.entry(c).or_insert(0) += i128::from(p.weight);
        }
    }
    sums.retain(|_, w| *w != 0);
    sums.len() == region.len() && sums.iter().all(|(c, &w)| w == 1 && region.contains(c))
}

/// Checks a tiling of `T_n`; with `symmetric`, also that the merged
/// placement multiset is closed under the rotation.
pub fn verify_tiling(n: u32, tiling: &Tiling, symmetric: bool) -> bool {
    let region = if n == 0 {
        Region::from_cells([])
    } else {
        match region_t(n) {
            Ok(r) => r,
            Err(_) => return false,
        }
    };
    if !verify_region(&region, &tiling.placements) {
        return false;
    }
    if symmetric {
        let merged = tiling.merged();
        return merged
            .iter()
            .all(|(&(kind, center), w)| merged.get(&(kind.rotate(), center.rotate())) == Some(w));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_tilings() {
        let empty = Tiling {
            placements: vec![],
            region_n: 0,
            symmetric: false,
        };
        assert!(verify_tiling(0, &empty, false));
        let p = Placement::new(TriboneType::X, Cell::ORIGIN, 1);
        let region = Region::from_cells(p.cells());
        assert!(verify_region(&region, &[p]));
        assert!(!verify_region(&region, &[]));
        assert!(!verify_region(&Region::from_cells([]), &[p]));
    }

    #[test]
    fn small_certificates() {
        for n in [8, 9] {
            let t = extract_certificate(n).unwrap();
            assert!(verify_tiling(n, &t, false), "n = {n}");
        }
        assert!(matches!(extract_certificate(1), Err(Error::NotTileable { n: 1, .. })));
    }

    #[test]
    fn symmetric_certificates() {
        for n in [26, 27] {
            let t = extract_symmetric_certificate(n).unwrap();
            assert!(verify_tiling(n, &t, true), "n = {n}");
        }
        assert!(extract_symmetric_certificate(8).is_err());
        assert!(matches!(
            extract_symmetric_certificate(28),
            Err(Error::FixedCell { n: 28 })
        ));
    }

    #[test]
    fn rotation_closure_is_enforced() {
        let mut t = extract_symmetric_certificate(26).unwrap();
        assert!(verify_tiling(26, &t, false));
        // three x-rows minus three y-columns of a 3x3 block sum to zero
        for j in 0..3 {
            t.placements.push(Placement::new(TriboneType::X, Cell::axial(41, j), 1));
            t.placements
                .push(Placement::new(TriboneType::Y, Cell::axial(40 + j, 1), -1));
        }
        assert!(verify_tiling(26, &t, false));
        assert!(!verify_tiling(26, &t, true));
    }
}
