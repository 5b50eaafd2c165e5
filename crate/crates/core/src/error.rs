use thiserror::Error;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to {expected}")]
    VariantMismatch { expected: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid symmetric set: {0}")]
    InvalidSet(String),

    #[error("{what} limit exceeded: {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("no decision strategy: {0}")]
    NoStrategy(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("element is not in the kernel of the projection to the base group")]
    NotInKernel,

    #[error("membership of z in the subgroup is unknown")]
    UnknownZStatus,

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(expected: impl Into<String>) -> Self {
        Error::VariantMismatch {
            expected: expected.into(),
        }
    }

    /// Whether the error means "not decided within the configured limits"
    /// rather than "malformed input".
    pub fn is_undecided(&self) -> bool {
        matches!(
            self,
            Error::LimitExceeded { .. } | Error::NoStrategy(_) | Error::UnknownZStatus
        )
    }
}
