use std::fmt;

/// Errors surfaced by the algebra kernel and the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text does not conform to the grammar; byte offset of the failure.
    Parse { pos: usize, msg: String },
    /// A computation exceeded its configured resource budget.
    Resource(String),
    /// An operation received an input outside its contract.
    Invalid(String),
    /// A cross-checked quantity came out inconsistent; signals a bug or bad input.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::Resource(m) => write!(f, "resource limit exceeded: {m}"),
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
            Error::Inconsistent(m) => write!(f, "consistency check failed: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
