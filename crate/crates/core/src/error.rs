use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate value {0}")]
    DuplicateValue(usize),
    #[error("value {value} out of range 1..={len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("empty token in permutation list")]
    EmptyToken,
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("digit-string form only covers lengths up to 9 (got {0} digits); use a comma-separated list")]
    DigitFormTooLong(usize),
    #[error("operation requires a non-empty permutation")]
    EmptyPermutation,
    #[error("skeleton of length {skeleton} inflated by {parts} parts")]
    ArityMismatch { skeleton: usize, parts: usize },
    #[error("inflation part {0} is empty")]
    EmptyPart(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1")]
    NonUnitConstantTerm,
    #[error("unclassifiable: {0}")]
    Unclassifiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
