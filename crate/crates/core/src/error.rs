use thiserror::Error;

/// Errors raised by sequence, graph and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied a value outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A precondition on a graph operation did not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A size or work guard was hit.
    #[error("resource limit: {what} is {actual}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Realization-space walk stopped at the configured class budget.
    #[error("realization budget of {budget} classes exhausted after {explored} classes")]
    BudgetExceeded { budget: usize, explored: usize },

    /// Every case of the constructive replay failed; `trace` holds the
    /// steps taken so far.
    #[error("replay failed: {reason}")]
    Replay { reason: String, trace: Vec<String> },

    /// Malformed textual input (graph6, sequences, edge lists).
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
