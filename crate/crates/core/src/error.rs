use thiserror::Error;

use crate::parse::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("duplicate outcome label `{0}`")]
    DuplicateLabel(String),

    #[error("expected {expected} labels, got {found}")]
    LabelCountMismatch { expected: String, found: usize },

    #[error("outcome labels differ: `{0}` is not present in both bundles")]
    LabelMismatch(String),

    #[error("bundle has no draws")]
    NoDraws,

    #[error("width is undefined at zero area")]
    ZeroArea,

    #[error("enumeration guard exceeded: {0}")]
    EnumerationGuard(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("too large to materialise: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
