//! Error type shared by every module.
//!
//! Two failure classes exist: *domain* errors (the caller asked for something
//! outside the mathematical domain, e.g. an even p or non-coprime inputs) and
//! *internal consistency* errors (two routes that must agree by theorem
//! disagreed, which indicates a bug rather than bad input). The CLI maps them
//! to exit codes 65 and 70 respectively.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input violates a precondition (invalid lens space, non-coprime pair, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two independently computed routes disagreed; the result cannot be trusted.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
