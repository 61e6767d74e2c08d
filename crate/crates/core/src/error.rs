use thiserror::Error;

/// Errors produced by graph, complex, checker, and harness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: loops, out-of-range vertices, bad file syntax,
    /// invalid argument combinations.
    #[error("invalid input: {0}")]
    Input(String),
    /// An operation was asked to exceed its configured size limit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
