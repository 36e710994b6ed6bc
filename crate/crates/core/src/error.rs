use thiserror::Error;

use crate::trees::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested size exceeds the configured exhaustive-search limit.
    #[error("capacity exceeded for {what}: requested {requested}, limit {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An identity that must hold exactly did not.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid tiered tree: {0}")]
    InvalidTree(Violation),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::Capacity {
            what,
            requested,
            limit,
        }
    }

    pub(crate) fn check_capacity(what: &'static str, requested: usize, limit: usize) -> Result<()> {
        if requested > limit {
            Err(Self::capacity(what, requested, limit))
        } else {
            Ok(())
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::InvalidTree(v)
    }
}
