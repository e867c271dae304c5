use crate::scalar::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime modulus supported here")]
    InvalidModulus(u64),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("cannot parse scalar `{0}`")]
    ParseScalar(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search space too large: {candidates} candidates exceeds limit {limit}")]
    TooLarge { candidates: u128, limit: u128 },

    #[error("parse error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}
