use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index ({row},{col}) out of range for rank {rank}")]
    IndexOutOfRange { row: usize, col: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("pole: {0}")]
    Pole(String),

    #[error("index sets have different sizes ({rows} rows, {cols} columns)")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("repeated index {0} in index set")]
    RepeatedIndex(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("element does not commute with E[{0},{0}]")]
    NotInCentralizer(usize),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("inadmissible pair: {0}")]
    Inadmissible(String),

    #[error("module too large: {needed} ambient coordinates exceed the bound {bound}")]
    SizeGuard { needed: u128, bound: u128 },

    #[error("singular weight: {0}")]
    SingularWeight(String),
}
