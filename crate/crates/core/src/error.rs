use thiserror::Error;

/// Failure modes shared by every module.
///
/// `Nonexistent` is reserved for parameters ruled out by a closed-form
/// iff condition; a search that runs out of budget reports
/// `Indeterminate` instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("no such object exists: {0}")]
    Nonexistent(String),

    #[error("search indeterminate: {0}")]
    Indeterminate(String),

    #[error("space too large: {count} words exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("catalog error: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
