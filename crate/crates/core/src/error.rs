use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("rim hook does not lie on the border of {0}")]
    NotARimHook(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("invalid cell partition: {0}")]
    InvalidCells(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operator is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("{0} is not an integer")]
    NonIntegral(String),

    /// An exactness assertion failed; always a bug, never a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
