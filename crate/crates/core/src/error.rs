//! Error type shared across the pipeline.

use crate::poly::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Precondition violations (zero inputs, negative exponents, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial or rational text that does not parse.
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    /// Both f and g are units at the origin, or f/g is a unit germ.
    #[error("trivial germ: {0}")]
    TrivialGerm(String),

    /// A truncated series is too short to decide a comparison.
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    /// A structural invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// CLI exit code classification: 1 input error, 2 property-check failure
    /// (assigned by the caller), 3 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}
