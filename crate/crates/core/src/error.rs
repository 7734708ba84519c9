use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A formula mentions `X{index}` but only `n` variables are in scope.
    #[error("formula uses X{index} but only {n} variable(s) are in scope")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation would have to touch more objects than the configured limit.
    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceLimit { what: &'static str, needed: String, limit: u64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
}
