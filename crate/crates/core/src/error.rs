use thiserror::Error;

/// Errors raised by the algebra kernel and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("solver failure: {0}")]
    SolverFailure(String),
    #[error("normalization failure: {0}")]
    NormalizationFailure(String),
    #[error("not expandable as a truncated series: {0}")]
    NotExpandable(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
