use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("series truncated at order {order} but degree {degree} is required")]
    TruncationTooShort { order: usize, degree: usize },
    #[error("unsupported operator: {0}")]
    UnsupportedOperator(String),
    #[error("negative row index {0}; use the evaluation path")]
    NegativeRowIndex(i64),
    #[error("repeated evaluation point {0}")]
    RepeatedEvaluationPoint(String),
    #[error("partition {0} does not fit in the box")]
    OutOfBox(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
