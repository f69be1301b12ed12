use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The caller handed in an input outside the operation's contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructive step that is guaranteed to succeed under verified
    /// preconditions failed. This would refute the result it relies on and is
    /// never retried.
    #[error("falsification event: {0}")]
    Falsification(String),

    /// A construction failed outside the regime where success is guaranteed.
    #[error("construction failed: {0}")]
    Construction(String),

    /// The instance is outside what this implementation supports.
    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("parse error at line {line}: {message}")]
    ParseLine { line: usize, message: String },

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
