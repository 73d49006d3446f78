use thiserror::Error;

use crate::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the relation contains a directed cycle through element {0}")]
    CycleDetected(ElementId),
    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a poset must have at least one element")]
    Empty,
    #[error("posets are limited to {max} elements, got {n}")]
    TooManyElements { n: usize, max: usize },
    #[error("cannot delete the only element of a poset")]
    Underflow,
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("sequence is not a linear extension of the poset")]
    NotALinearExtension,
    #[error("linear extension is not greedy")]
    NotGreedy,
    #[error("map is not an automorphism of the poset")]
    NotAutomorphism,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("input is not N-free")]
    NotNFree,
    #[error("input is a chain")]
    IsChain,
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(u64),
    #[error("size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("invalid size: {0}")]
    SizeError(String),
    #[error("edge probability {0} is outside [0, 1]")]
    ProbabilityRange(f64),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    InvalidInput,
    Precondition,
    Limit,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::CapExceeded(_) | Error::LimitExceeded { .. } | Error::TooManyElements { .. } => {
                ErrorClass::Limit
            }
            Error::CycleDetected(_)
            | Error::IndexOutOfRange { .. }
            | Error::Empty
            | Error::Syntax { .. }
            | Error::ArityMismatch(_)
            | Error::SizeMismatch { .. }
            | Error::NotAPermutation(_)
            | Error::SizeError(_)
            | Error::ProbabilityRange(_) => ErrorClass::InvalidInput,
            Error::Underflow
            | Error::NotALinearExtension
            | Error::NotGreedy
            | Error::NotAutomorphism
            | Error::PreconditionViolated(_)
            | Error::NotNFree
            | Error::IsChain => ErrorClass::Precondition,
        }
    }
}
