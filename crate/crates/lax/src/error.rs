//! Error type of the lax homotopy calculus.

use group_kernel::GroupError;
use homotopy_2groupoid::HomotopyError;
use thiserror::Error;

/// Errors raised while building the free resolution or manipulating lax
/// homotopies.
#[derive(Debug, Error)]
pub enum LaxError {
    /// A construction needed a finite carrier.
    #[error("carrier `{0}` must be finite here")]
    NotEnumerable(String),
    /// A table or image list does not fit its declared carrier.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// Two cells or morphisms do not compose.
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    /// A homotopy on the resolution does not sit between strict maps.
    #[error("not strict: {0}")]
    NotStrict(String),
    /// Underlying carrier error.
    #[error(transparent)]
    Carrier(#[from] GroupError),
    /// Error from the strict homotopy layer.
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, LaxError>;
