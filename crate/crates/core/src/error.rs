use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("iteration cap exceeded: {0}")]
    IterationCap(String),
    #[error("consistency check failed: {0}")]
    ConsistencyFailure(String),
}
