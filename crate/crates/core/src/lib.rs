//! Signed and rotation-symmetric tilings of triangular regions of the
//! hexagonal lattice by three-in-line tiles ("tribones").
//!
//! The crate is layered bottom-up:
//!
//! - [`polynomial`]: sparse integer polynomials, term orders, division and
//!   quotient-ring normal forms.
//! - [`groebner`]: strong Groebner bases over `Z` with cofactor tracking,
//!   full reduction and ideal membership certificates.
//! - [`hexlattice`]: cells, tribones, the triangles `T_N` and their
//!   integer-point transforms.
//! - [`invariants`]: the rotation-invariant subring `Z[s1, s2, t] / <Theta>`
//!   and the tribone ideal inside it.
//! - [`engine`]: tileability decisions, tiling certificates, tiling
//!   verification and an integer linear algebra cross-check.

pub mod engine;
pub mod error;
pub mod groebner;
pub mod hexlattice;
pub mod invariants;
pub mod polynomial;

pub use error::{Error, Result};
