use thiserror::Error;

use crate::geometry::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell {cell} lies outside the shape {shape}")]
    CellOutsideShape { cell: Cell, shape: Partition },

    #[error("the empty partition has no corners")]
    EmptyPartition,

    #[error("row {row} has {found} entries, shape requires {expected}")]
    RaggedGrid {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("grid has {found} rows, shape requires {expected}")]
    RowCount { expected: usize, found: usize },

    #[error("negative entry at {cell}")]
    NegativeEntry { cell: Cell },

    #[error("rows and columns must weakly increase; violated at {cell}")]
    NotMonotone { cell: Cell },

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: Partition, right: Partition },

    #[error("path leaves the shape at {cell}")]
    PathLeavesShape { cell: Cell },

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("{cell} is not a candidate")]
    NotACandidate { cell: Cell },

    #[error("no rim-hook with tail {tail} and {len} cells")]
    NoMatchingRimHook { tail: Cell, len: usize },

    #[error("{cell} is not an outer corner of {shape}")]
    NotAnOuterCorner { cell: Cell, shape: Partition },

    #[error("not a semi-standard tableau: {0}")]
    NotSemistandard(String),

    #[error("not a permutation matrix")]
    NotAPermutationMatrix,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("projected work {projected} exceeds the ceiling {ceiling}")]
    BudgetExceeded { projected: u128, ceiling: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
