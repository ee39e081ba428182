//! Error types shared by all modules.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument was outside its documented range or inconsistent with the
    /// ambient dimensions.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The requested computation exceeds a hard capacity limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
