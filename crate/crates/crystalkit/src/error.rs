//! Error type shared by every module of the library.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text could not be parsed into the requested value.
    #[error("parse error: {0}")]
    Parse(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A breadth-first closure or enumeration grew past its element budget.
    #[error("element budget exceeded: explored {explored} elements (max {budget})")]
    Budget { explored: usize, budget: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
