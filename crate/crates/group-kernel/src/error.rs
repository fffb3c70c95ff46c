//! Error type shared by the carrier constructors.

use thiserror::Error;

/// Errors raised by group construction and verification.
#[derive(Debug, Error)]
pub enum GroupError {
    /// A left action failed one of its laws on the probe set.
    #[error("action law violation: {0}")]
    ActionLawViolation(String),
    /// An operation requiring a finite carrier was applied to an infinite one.
    #[error("carrier `{0}` is not enumerable")]
    NotEnumerable(String),
    /// The claimed normal subgroup is not closed under conjugation.
    #[error("subgroup is not normal: conjugating {witness} leaves the subgroup")]
    NotNormal {
        /// Description of the offending (parent element, subgroup element) pair.
        witness: String,
    },
    /// An element was used with a carrier it does not belong to.
    #[error("carrier mismatch: expected `{expected}`, got `{got}`")]
    CarrierMismatch {
        /// Name of the carrier the operation expected.
        expected: String,
        /// Name of the carrier the element belongs to.
        got: String,
    },
    /// Two maps that must share a codomain (or compose) do not line up.
    #[error("map mismatch: {0}")]
    MapMismatch(String),
    /// A group axiom failed (used when validating user-supplied tables).
    #[error("group axiom `{axiom}` failed at {witness}")]
    AxiomFailure {
        /// Name of the violated axiom.
        axiom: String,
        /// The witnessing tuple, rendered.
        witness: String,
    },
}

/// Convenience alias for fallible carrier operations.
pub type Result<T> = std::result::Result<T, GroupError>;
