use thiserror::Error;

/// Errors surfaced by the exact-arithmetic layer and the modules built on it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("degree of zero undefined")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("value has half-integer powers of t: {0}")]
    HalfPower(String),
    #[error("partition size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("specialize α first")]
    AlphaSymbolic,
    #[error("pole encountered: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
