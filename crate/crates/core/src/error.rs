use thiserror::Error;

/// Errors raised by the library. Each variant maps to one class of caller
/// mistake; numerical findings (violations, flagged maxima) are never errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed call: mismatched orders, too few coefficients, bad indices.
    #[error("usage error: {0}")]
    Usage(String),
    /// Input outside the domain of an operation (e.g. composing with a
    /// series that has a nonzero constant term).
    #[error("domain error: {0}")]
    Domain(String),
    /// A Schwarz parameter with magnitude greater than one.
    #[error("admissibility error: {0}")]
    Admissibility(String),
    /// A subordinating function with B1 <= 0 or non-finite coefficients.
    #[error("invalid phi: {0}")]
    InvalidPhi(String),
    /// Out-of-range class or family parameter.
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
