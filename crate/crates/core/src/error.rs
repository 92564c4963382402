use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("field has no gradient evaluator")]
    MissingGradient,

    #[error("non-finite sample encountered in {0}")]
    NonFinite(String),

    #[error("lattice resolution {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("smoothing certification failed at index {index}: C1 norm {c1_norm:.6e} exceeds bound {bound:.6e}")]
    CertificationFailed {
        index: usize,
        c1_norm: f64,
        bound: f64,
    },

    #[error("sample count {got} too small, need at least {min}")]
    SampleCountTooSmall { got: usize, min: usize },

    #[error("method mismatch: {0}")]
    MethodMismatch(String),

    #[error("degenerate diffusion: lower ellipticity margin {0:.6e}")]
    DegenerateDiffusion(f64),

    #[error("fixed-point iteration diverged after {iterations} steps (distance increased three times in a row)")]
    NonContraction { iterations: usize },

    #[error("sequence of estimates is not Cauchy: successive gaps grew from {first:.6e} to {last:.6e}")]
    NonCauchy { first: f64, last: f64 },

    #[error("not enough usable rows for a fit: {got} positive rows, need {min}")]
    InsufficientRows { got: usize, min: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
