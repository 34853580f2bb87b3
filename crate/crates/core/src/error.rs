use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("structure map is not regular (determinant {0})")]
    NotRegular(String),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("not an O-operator: {0}")]
    NotOOperator(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
