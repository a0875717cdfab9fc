use thiserror::Error;

/// Errors raised by the geometric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ray has no nonzero coordinate")]
    InvalidRay,

    #[error("vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("chart undefined: coordinate {0} vanishes")]
    ChartUndefined(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("geodesic endpoints are not orthonormal (overlap {0})")]
    GeodesicBasis(f64),

    #[error("need at least {needed} samples, got {found}")]
    InsufficientSamples { needed: usize, found: usize },

    #[error("sample {0} is orthogonal to its successor")]
    DisconnectedSamples(usize),

    #[error("tangent violates the normalization constraint (Re<psi|dpsi> = {0})")]
    Tangent(f64),

    #[error("size out of range: {0}")]
    Size(&'static str),

    #[error("index {index} out of range for dimension {dim}")]
    Index { index: usize, dim: usize },

    #[error("argument outside its domain: {0}")]
    Domain(&'static str),

    #[error("kernel has zero overlap with the target; no rotation")]
    DegenerateKernel,

    #[error("smallest amplitude is zero; target unreachable")]
    UnreachableTarget,

    #[error("first-order maximizer undefined or outside [0, 1] at u = {0}")]
    ApproxDomain(f64),

    #[error("numerical failure: {0}")]
    Numerical(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
