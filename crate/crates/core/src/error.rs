use thiserror::Error;

/// Errors raised by geometric constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point set")]
    Empty,

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("improper: no open hemisphere contains the points")]
    Improper,

    #[error("no common open hemisphere for the pair")]
    ImproperPair,

    #[error("point outside chart hemisphere (u.v = {dot})")]
    OutOfChart { dot: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("support functional is infinite at the evaluated point")]
    Domain,

    #[error("matrix is singular (|det| = {det})")]
    Singular { det: f64 },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("origin is not an interior point (support value {value})")]
    OriginNotInterior { value: f64 },

    #[error("unsupported ambient dimension {0} for the exact path")]
    UnsupportedDim(usize),

    #[error("radial value {value} outside [0, pi/2)")]
    RadialRange { value: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(GeomError::DimensionMismatch { expected, found });
    }
    Ok(())
}
