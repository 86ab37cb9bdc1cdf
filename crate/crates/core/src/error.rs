use thiserror::Error;

/// Errors raised by the algebra, lattice and decision layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableSetMismatch { left: String, right: String },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not invariant under the 120-degree rotation")]
    NotInvariant,

    #[error(
        "T_{n} has N = 1 (mod 3): its center is a cell fixed by the 120-degree rotation, \
         so rotation-symmetric tilings are out of scope"
    )]
    FixedCell { n: u32 },

    #[error("T_{n} admits no signed tiling by tribones{}", if *.symmetric { " symmetric under the 120-degree rotation" } else { "" })]
    NotTileable { n: u32, symmetric: bool },

    #[error("oracle system too large: {columns} columns exceeds the cap of {cap}")]
    DimensionCap { columns: usize, cap: usize },

    #[error("unknown closed-form family `{0}` (expected L, square, delta or nabla)")]
    UnknownFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed ideal file, line {line}: {message}")]
    IdealFile { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
