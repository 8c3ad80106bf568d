use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point set")]
    Empty,

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no convergence after {iterations} iterations (best gap {gap:e})")]
    NoConvergence { iterations: usize, gap: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration guard exceeded: {points} lattice points in the annulus (cap {cap}); {estimate}")]
    GuardExceeded { points: usize, cap: usize, estimate: String },

    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
