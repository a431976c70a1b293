use thiserror::Error;

/// Errors raised while validating representations or applying kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    ZeroOrder,
    #[error("{what}: expected length {expected}, got {got}")]
    Length {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("sparsity pattern entry ({row}, {col}) out of range for order {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },
    #[error("sparsity pattern contains duplicate entry ({row}, {col})")]
    Duplicate { row: usize, col: usize },
    #[error("toeplitz and hankel parts have different orders ({toeplitz} vs {hankel})")]
    OrderMismatch { toeplitz: usize, hankel: usize },
    #[error("multilevel representation needs at least one level")]
    NoLevels,
    #[error("multilevel levels must not themselves be multilevel")]
    NestedMultilevel,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operation requires at least two levels")]
    SingleLevel,
}

pub type Result<T> = std::result::Result<T, Error>;
