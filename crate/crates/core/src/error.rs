//! The crate-wide error type.

use crate::report::Violation;

/// Errors reported by constructors and precondition checks.
///
/// Operations that *verify* identities return a [`crate::CheckReport`]
/// instead; `CoreError` is reserved for malformed inputs and for
/// constructions whose preconditions fail (carrying the first witnessing
/// violation where one exists).
#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimMismatch { what: &'static str, expected: usize, got: usize },

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("vector does not lie in the subspace")]
    NotContained,

    #[error("index {index} out of range for dimensions {dims:?}")]
    IndexOutOfRange { index: usize, dims: Vec<usize> },

    #[error("duplicate entry at index {index:?}")]
    DuplicateEntry { index: Vec<usize> },

    #[error("number of copies in a direct sum must be at least 1")]
    EmptySum,

    #[error("the given subspace is not an ideal ({violation})")]
    NotAnIdeal { violation: Violation },

    #[error("map does not square to zero (fails on basis vector {index})")]
    NotSquareZero { index: usize },

    #[error("map is not a derivation of the bracket ({violation})")]
    NotADerivation { violation: Violation },

    #[error("map is not a morphism of representations ({violation})")]
    NotAMorphism { violation: Violation },

    #[error("bracket-difference span is not closed under the brackets ({violation})")]
    IdealClosureFailure { violation: Violation },

    #[error("quotient action depends on the choice of representatives ({violation})")]
    QuotientIllDefined { violation: Violation },

    #[error("map is not an embedding tensor ({violation})")]
    NotAnEmbeddingTensor { violation: Violation },

    #[error("the given data is not an action ({violation})")]
    NotAnAction { violation: Violation },

    #[error("map is not a homomorphic embedding tensor ({violation})")]
    NotHomomorphicEmbeddingTensor { violation: Violation },

    #[error("pair is not a Nijenhuis element ({violation})")]
    NotANijenhuisElement { violation: Violation },

    #[error("{what} is not invertible")]
    NotInvertible { what: &'static str },

    #[error("map pair fails the intertwining identities ({violation})")]
    IntertwiningFailure { violation: Violation },
}
