//! Error type for homotopy construction.

use thiserror::Error;

/// Errors raised when assembling or combining homotopies.
#[derive(Debug, Error)]
pub enum HomotopyError {
    /// An operation requiring a free base carrier was applied to a
    /// non-free one (homomorphic extension only exists over free carriers).
    #[error("source base group `{0}` is not free")]
    SourceNotFree(String),
    /// The two authoritative ways of computing a value disagreed; this is
    /// a hard error because it means one of the closed forms is wrong.
    #[error("dual computation mismatch: {0}")]
    DualComputationMismatch(String),
    /// Cells were combined whose endpoints do not match.
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    /// A map was supplied with the wrong shape (domain, codomain, arity).
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// An underlying carrier construction failed.
    #[error("carrier construction failed: {0}")]
    Carrier(#[from] group_kernel::GroupError),
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, HomotopyError>;
