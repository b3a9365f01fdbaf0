use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("key sum overflows the integer key range")]
    Overflow,

    #[error("floating key {0} is not finite")]
    NonFinite(f64),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// `position` is the index of the first element smaller than its
    /// predecessor (or a 1-based line number when raised by the file parser).
    #[error("sequence is not sorted at position {position}")]
    NotSorted { position: usize },

    #[error("input is empty")]
    EmptyInput,

    #[error("k-fold sorting needs at least 2 lists, got {k}")]
    Arity { k: usize },

    #[error("rank {rank} out of bounds for store of size {size}")]
    RankOutOfBounds { rank: usize, size: usize },

    #[error("inserting at rank {rank} would break the store ordering")]
    OrderViolation { rank: usize },

    #[error("cursor was invalidated by an insert through another cursor")]
    StaleCursor,

    #[error("{cells} sumset cells exceed the configured cap of {cap}")]
    ResourceLimit { cells: u128, cap: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("csv row {row} has {found} cells, header has {expected}")]
    RaggedRow { row: usize, found: usize, expected: usize },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
