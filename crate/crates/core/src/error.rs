//! Error type shared across the crate.

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(BigInt),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("body is degenerate: {0}")]
    DegenerateBody(String),
    #[error("constraint system is unbounded")]
    Unbounded,
    #[error("body is not 0-symmetric")]
    NotZeroSymmetric,
    #[error("operation requires an ellipsoid body")]
    NotEllipsoid,
    #[error("operation requires a polytope body")]
    NotPolytope,
    #[error("dimension {0} exceeds the supported limit {1}")]
    DimensionTooLarge(usize, usize),
    #[error("gauge of the zero vector is undefined")]
    ZeroVector,
    #[error("search parameters exceed the exhaustive-scan guard: {0}")]
    GuardViolation(String),
    #[error("successive-minima scaling cap {0} exceeded")]
    MinimaCapExceeded(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
