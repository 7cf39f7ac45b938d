use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SgaError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("dimension cap exceeded: representation needs {needed} generators, cap is {cap}")]
    DimensionCap { needed: usize, cap: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("forbidden product: {0}")]
    ForbiddenProduct(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("angle not exactly representable: {0}")]
    NotRepresentable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is outside the algebra: {0}")]
    NotInAlgebra(String),
    #[error("reflection does not act by ±1 on axis {0}")]
    NotAReflection(usize),
}

pub type Result<T> = std::result::Result<T, SgaError>;
