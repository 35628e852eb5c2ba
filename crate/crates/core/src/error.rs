use thiserror::Error;

/// A malformed text literal, with the byte offset where parsing stopped.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown or unsupported root system: {0}")]
    UnknownType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("computation truncated: {0}")]
    Truncated(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("q-exponent {0} is not an integer")]
    FractionalExponent(String),
    #[error("element is not invariant under the dot action")]
    NotInvariant,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
