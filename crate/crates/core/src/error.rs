use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not classifiable: {0}")]
    NotClassifiable(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
