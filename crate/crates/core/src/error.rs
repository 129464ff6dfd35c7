use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("row {row} is not addable in {partition}")]
    NotAddable { partition: String, row: usize },

    #[error("row {row} is not removable in {partition}")]
    NotRemovable { partition: String, row: usize },

    #[error("staircase size must be positive")]
    EmptyStaircase,

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("weight {w} is outside the range of the radical formula for p = {p} (need w < p)")]
    WeightOutOfRange { p: u32, w: usize },

    #[error("quotient has {got} components, expected {expected}")]
    QuotientLength { expected: usize, got: usize },

    #[error("quotient sizes sum to {got}, expected weight {expected}")]
    QuotientSize { expected: usize, got: usize },

    #[error("block with p = {p}, w = {w} does not have the Rouquier core")]
    NotRouquier { p: u32, w: usize },

    #[error("partition {partition} does not lie in the block (core or weight differs)")]
    NotInBlock { partition: String },

    #[error("partition {0} is not p-restricted")]
    NotRestricted(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
