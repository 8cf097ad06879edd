use thiserror::Error;

/// Errors raised by the combinatorial constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus n must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("letter {letter} is not a residue mod {n}")]
    InvalidLetter { letter: usize, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("degenerate transposition: {i} and {j} are congruent mod {n}")]
    DegenerateTransposition { i: i64, j: i64, n: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{shape} is not a {n}-core")]
    NotACore { shape: String, n: usize },
    #[error("word is not reduced at position {position}")]
    NonReducedWord { position: usize },
    #[error("no addable corner of residue {residue}")]
    NoAddableCorner { residue: usize },
    #[error("part {part} is out of range for n = {n}")]
    PartOutOfRange { part: usize, n: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("weight {0} is not a partition")]
    NonPartitionWeight(String),
    #[error("matrix is not invertible over Z[t]: {0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
