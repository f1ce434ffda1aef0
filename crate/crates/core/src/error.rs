use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),

    #[error("negative exponent in positive word: `{0}`")]
    NegativeExponent(String),

    #[error("index {index} out of range (expected 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("mismatched ambient structures: {0}")]
    Mismatch(String),

    #[error("relation {index} is not weight-homogeneous ({left} vs {right})")]
    NotHomogeneous { index: usize, left: u64, right: u64 },

    #[error("invalid complement table: {0}")]
    InvalidComplement(String),

    #[error("reversal exceeded the step budget of {cap}")]
    Diverged { cap: u64 },

    #[error("words have no common multiple")]
    NoCommonMultiple,

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("not a Garside structure: {0}")]
    NotGarside(String),

    #[error("distinguished element is trivial in the base group")]
    TrivialDistinguished,

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
