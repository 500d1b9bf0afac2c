use thiserror::Error;

/// Errors raised by constructors and operations that cannot produce a
/// meaningful report. Identity violations are reported through
/// [`crate::report::CheckReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("multiplication is not associative: {0}")]
    NotAssociative(String),

    #[error("tensor is not invariant: {0}")]
    NotInvariant(String),

    #[error("tensor is not symmetric")]
    NotSymmetric,

    #[error("bilinear form or tensor is degenerate")]
    Degenerate,

    #[error("bilinear form is not invariant: {0}")]
    NotInvariantForm(String),

    #[error("bilinear form is not symmetric")]
    NotSymmetricForm,

    #[error("augmentation is not an algebra homomorphism: {0}")]
    InvalidAugmentation(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("not a dendriform algebra: {0}")]
    NotDendriform(String),

    #[error("product involving the unit on both sides is undefined")]
    UndefinedUnitProduct,

    #[error("candidate space of {candidates} tensors exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("solution families are only classified for nonzero mu")]
    ZeroMu,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_mismatch(what: impl Into<String>) -> Error {
    Error::DimensionMismatch(what.into())
}
