//! One error type for the whole crate.
//!
//! Most operations here are total on their documented domain; the variants
//! below are the contract violations a caller can actually trigger (mismatched
//! sizes, truncated variable counts, poles, bad case parameters, I/O).

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dominance order is only defined between partitions of equal size.
    #[error("dominance comparison requires equal sizes: |{0}| != |{1}|")]
    UnequalSize(String, String),

    /// Arm/leg statistics are only defined for cells inside the diagram.
    #[error("cell ({row}, {col}) lies outside the diagram of {shape}")]
    CellOutside { row: usize, col: usize, shape: String },

    /// Text that does not parse as a partition, rational, or polynomial.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Division of rational functions by zero.
    #[error("division by zero in Q(a)")]
    DivisionByZero,

    /// A rational function was evaluated at a root of its denominator.
    #[error("pole at a = {0}")]
    PoleAtPoint(String),

    /// Binary operations on symmetric polynomials need matching bases.
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(String, String),

    /// Binary operations on symmetric polynomials need matching variable counts.
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    /// A partition key is longer than the number of variables allows.
    #[error("partition {partition} has {len} parts but only {nvars} variables")]
    LengthExceedsVars { partition: String, len: usize, nvars: usize },

    /// Changing basis from monomials to power sums needs nvars >= degree.
    #[error("unstable truncation: degree {degree} needs at least {degree} variables, have {nvars}")]
    UnstableTruncation { degree: usize, nvars: usize },

    /// Rejected parameters for a Hermitian symmetric case.
    #[error("invalid case parameters: {0}")]
    InvalidParameters(String),

    /// A partition argument is longer than the rank of the case.
    #[error("partition {partition} has {len} parts, exceeding rank {rank}")]
    RankExceeded { partition: String, len: usize, rank: usize },

    /// Triple with |nu| != |lambda| + |mu| where the grading forbids it.
    #[error("size mismatch: |nu| = {nu} but |lambda| + |mu| = {total}")]
    SizeMismatch { nu: usize, total: usize },

    /// The requested multiplicity only has a conjectural formula.
    #[error("case {0} has only a conjectural multiplicity formula")]
    ConjecturalCase(String),

    /// so(3,2) is isomorphic to sp(2,R); tensor data must go through sp:2.
    #[error("so2:3 tensor multiplicities are not supported; use the isomorphic case sp:2")]
    IsomorphicCase,

    /// Scan size beyond the built-in cap without the explicit override.
    #[error("max size {0} exceeds the hard cap {1}; pass --i-know-what-im-doing to override")]
    CapExceeded(usize, usize),

    /// Cache or report I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
