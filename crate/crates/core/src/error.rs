use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not a unit: constant term is zero")]
    NonUnit,
    #[error("parameter `a` must be nonzero")]
    ZeroParameter,
    #[error("negative rank {0} is not allowed here")]
    NegativeRank(i64),
    #[error("mismatched models: {0}")]
    Mismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
