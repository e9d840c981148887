use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A literal failed to parse; `pos` is the byte offset of the failure.
    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
