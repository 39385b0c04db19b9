use thiserror::Error;

use crate::parse::ParseError;
use crate::poly::Ring;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("ring mismatch: {0:?} vs {1:?}")]
    RingMismatch(Ring, Ring),

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("polynomial is not homogeneous of the declared degree {0}")]
    NotHomogeneous(String),

    #[error("polynomial is zero; cannot infer its degree")]
    ZeroForm,

    #[error("transvectant index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("singular matrix")]
    Singular,

    #[error("Lie algebra element is not traceless")]
    NotTraceless,

    #[error("subspace must be proper and nonzero, got dimension {dim} in ambient {ambient}")]
    TrivialSubspace { dim: usize, ambient: usize },

    #[error("subspace is not invariant under the group element")]
    NotInvariant,

    #[error("degenerate input: {0}")]
    Degenerate(String),
}
