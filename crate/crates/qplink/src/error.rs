use thiserror::Error;

/// Errors produced by parsers, constructors and the invariant pipelines.
///
/// Parse errors carry 1-based token positions so the CLI can point at the
/// offending token.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("edge {edge} appears {count} times (every edge label must appear exactly twice)")]
    EdgeUse { edge: usize, count: usize },

    #[error("edge {edge} has an inconsistent head/tail structure")]
    HeadTail { edge: usize },

    #[error("formulas proved only for positive diagrams")]
    NonPositiveDiagram,

    #[error("component index {given} out of range 1..={count}")]
    ComponentIndex { given: usize, count: usize },

    #[error("band presentation does not expand to the given factorization")]
    SqpMismatch,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
