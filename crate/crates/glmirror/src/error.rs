//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures raised by the library.
///
/// Each variant corresponds to a distinct class of caller-visible problem so
/// that the command-line front end can map them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    /// A size parameter lies outside the supported range.
    #[error("size limit: {0}")]
    SizeLimit(String),
    /// A generator or coordinate index lies outside its valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// An input violates a mathematical precondition (for example a weight that is not dominant).
    #[error("domain error: {0}")]
    Domain(String),
    /// A computation hit a vanishing minor or a non-invertible element.
    #[error("non-generic input: {0}")]
    NonGeneric(String),
    /// An expression referenced a variable without an assigned value.
    #[error("unbound variable: {0}")]
    UnboundVariable(String),
    /// A structure failed an internal consistency check.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// The requested operation is not available for this input kind.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, MirrorError>;
