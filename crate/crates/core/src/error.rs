use thiserror::Error;

/// Errors raised by the construction and analysis routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed partition tree: {0}")]
    MalformedTree(String),

    #[error("sign vector is not realizable by any configuration")]
    Unrealizable,

    #[error("mismatched inputs: {0}")]
    Mismatch(String),

    #[error("malformed constraint: {0}")]
    MalformedConstraint(String),

    #[error("resource limit exceeded: {what} would produce {projected} items (limit {limit})")]
    ResourceLimit {
        what: String,
        projected: u128,
        limit: u128,
    },

    #[error("group action is not free: {0}")]
    NonFreeAction(String),

    #[error("degree {degree} out of range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
