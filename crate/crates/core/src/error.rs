use thiserror::Error;

use crate::setfun::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size must be in 1..={max}, got {n}")]
    GroundSetSize { n: usize, max: usize },

    #[error("subset {bits:#b} does not fit a ground set of size {n}")]
    SubsetOutOfRange { bits: u32, n: usize },

    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("measure of the empty set must be 0")]
    EmptySetNonzero,

    #[error("measure of the whole ground set must be positive")]
    TotalNotPositive,

    #[error("not monotone: μ({smaller}) > μ({larger})")]
    NotMonotone { smaller: Subset, larger: Subset },

    #[error("invalid value grid: {0}")]
    GridInvalid(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid operator descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("collection must contain the empty set")]
    EmptySetMissing,

    #[error("operator evaluates to {value} on the empty set; A(·|∅) must be 0")]
    EmptySetAggregationNonzero { value: String },

    #[error("operator is approximate; pass an explicit tolerance")]
    ApproxOperatorWithoutTolerance,

    #[error("malformed probe: {0}")]
    ProbeMalformed(String),

    #[error("family is not nondecreasing with respect to sets: {0}")]
    NotMonotoneFamily(String),

    #[error("collection is not the full power set")]
    CollectionNotPowerset,

    #[error("invalid step function: {0}")]
    InvalidStepFn(String),

    #[error("chain values not admissible: {0}")]
    ValuesNotMonotone(String),

    #[error("theorem cross-check failed: {0}")]
    ConsistencyViolation(String),

    #[error("condition lattice row {row} violated on {instance}")]
    LatticeViolation { row: String, instance: String },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Re-anchors a parse error raised without location context.
    pub(crate) fn at(self, location: &str) -> Self {
        match self {
            Error::Parse { location: l, message } if l.is_empty() => Error::Parse {
                location: location.to_string(),
                message,
            },
            other => other,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
