use thiserror::Error;

/// Errors raised by the enumeration and evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A brute-force enumeration was asked to exceed its configured size limit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An identity that holds as a theorem failed to hold; this indicates a bug.
    #[error("consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
