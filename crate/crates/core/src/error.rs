use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("context mismatch: (m,d)=({0},{1}) vs ({2},{3})")]
    ContextMismatch(usize, usize, usize, usize),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("enumeration bound exceeded: {what} needs {needed} but the bound is {bound}")]
    BoundExceeded {
        what: String,
        needed: String,
        bound: usize,
    },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("representation check failed: {0}")]
    RelationFailure(String),
    #[error("element is not in the subgroup: {0}")]
    NotInSubgroup(String),
    #[error("undefined product in a check that must be computable: {0}")]
    UndefinedProduct(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
