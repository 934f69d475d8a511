use alloc::string::String;

/// Errors raised by the algebraic and combinatorial engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at N = {0}")]
    Pole(i64),
    #[error("interpolation mismatch at n = {0}: degree bound too small")]
    InterpolationMismatch(i64),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("falsification alarm: {0}")]
    Falsified(String),
}

pub type Result<T> = core::result::Result<T, Error>;
