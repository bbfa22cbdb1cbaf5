//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed matrix text.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Incompatible shapes, or a shape precondition violated.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A row, column, or element index outside the matrix.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Input exceeds a documented enumeration bound.
    #[error("size guard: {0}")]
    SizeGuard(String),

    /// The operation requires a viable matrix (matching number = column count).
    #[error("matrix is not viable: rank {rank} != {columns} columns")]
    NotViable { rank: usize, columns: usize },

    /// Two matrices do not share a ground set.
    #[error("ground sets differ: {left} vs {right} rows")]
    GroundSetMismatch { left: usize, right: usize },
}
