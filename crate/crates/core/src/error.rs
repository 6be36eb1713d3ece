use thiserror::Error;

/// Errors raised by the exact engine and the region lab.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// An exactness invariant was violated (non-exact division, identity mismatch, ...).
    /// Never rounded away; surfaced to the caller.
    #[error("invariant violated in {op}: {detail}")]
    Invariant { op: &'static str, detail: String },

    /// The requested floating precision cannot resolve the quantity asked for.
    #[error("precision error: {0}")]
    Precision(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { op, detail: detail.into() }
    }

    pub(crate) fn invariant(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant { op, detail: detail.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
