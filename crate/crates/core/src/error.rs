use thiserror::Error;

use crate::partitions::Signature;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid comparison: {0}")]
    InvalidComparison(String),

    #[error("variable count mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("eigenvalue collision while building P({lambda}): pivot for ({mu}) vanishes")]
    EigenvalueCollision { lambda: Signature, mu: Signature },

    #[error("gamma pole at {0}")]
    Pole(String),

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("hypothesis not satisfied: {0}")]
    Inapplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
