use thiserror::Error;

use crate::matroid::FaceSet;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A configured cap on faces, tuples or time was exceeded.
    #[error("resource limit exceeded: {what} (progress: {progress})")]
    ResourceLimit { what: String, progress: u64 },

    /// A hypothesis of a connectivity verifier is false. `certificate` is a
    /// subset `A'` of the offending set with `m * rank(A') < |A'|`.
    #[error("hypothesis violated for set {index}: certificate {certificate:?}")]
    HypothesisViolated { index: usize, certificate: FaceSet },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
