//! Shared error type.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller violated an operation's contract (bad argument,
    /// mismatched degree bounds, missing prefix).
    #[error("usage error: {0}")]
    Usage(String),
    /// A value does not fit the machine integer range.
    #[error("out of range: {0}")]
    Range(String),
    /// A computed value contradicts a structural invariant; this can only
    /// arise from corrupted input (e.g. a wrong σ-sequence fed to the
    /// pentagonal recurrence).
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    /// A resource cap was exceeded or an allocation failed.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
