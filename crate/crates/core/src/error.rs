use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the mathematical domain (e.g. `n < 2`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation would exceed a configured size limit.
    #[error("{what} is {actual}, above the limit of {limit}")]
    Resource {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn resource(what: &'static str, actual: u64, limit: u64) -> Self {
        Error::Resource {
            what,
            actual,
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
