use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TdvError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {n} vertices; at most {} are supported", MAX_VERTICES)]
    TooLarge { n: usize },

    /// A vertex without neighbors cannot be totally dominated.
    #[error("no total dominating set exists: vertex {vertex} is isolated")]
    NoTdsExists { vertex: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = TdvError> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> TdvError {
    TdvError::InvalidInput(msg.into())
}
