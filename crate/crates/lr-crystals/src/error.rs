//! One error type for the whole crate.

use thiserror::Error;

use crate::shapes::Cell;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or combining the combinatorial
/// objects in this crate.
///
/// Invalid *data* (a weakly-increasing part list, a filling that is not
/// semistandard) is an error at construction time; invalid *mathematics*
/// (a tableau outside the crystal handed to [`crate::pictures::picture_from_tableau`])
/// surfaces as [`Error::ContractViolation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell ({},{}) listed more than once", .0.row, .0.col)]
    DuplicateCell(Cell),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error(
        "order is not admissible: ({},{}) must precede ({},{})",
        .first.row, .first.col, .second.row, .second.col
    )]
    NotAdmissible { first: Cell, second: Cell },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("cell ({},{}) lies outside the shape", .0.row, .0.col)]
    OutsideShape(Cell),

    #[error("not a bijection: {0}")]
    NotBijective(String),

    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),
}
