use thiserror::Error;

/// Errors shared by every engine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Division by a zero field element.
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    /// A desk-scale resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// Parameter combinations the engines refuse to evaluate.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
