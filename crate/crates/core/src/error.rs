use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {symbol:?} at position {position}; expected '0' or '1'")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("invalid letter {0}; expected 0 or 1")]
    InvalidLetter(u8),

    #[error("word contains {cube} at position {position}")]
    ForbiddenCube { cube: &'static str, position: usize },

    #[error("invalid profile entry {value} at index {index}")]
    InvalidProfile { index: usize, value: usize },

    #[error("sequence entry at index {index} is not positive")]
    NonPositiveEntry { index: usize },

    #[error("sequence is not valley-free (valley at index {valley})")]
    NotInX { valley: usize },

    #[error("parts must be positive and strictly increasing: {0}")]
    InvalidPartition(String),

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("malformed {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
