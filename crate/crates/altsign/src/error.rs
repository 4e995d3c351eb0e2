use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A row or column of a square matrix. Indices are 1-based, matching every
/// error message and file format in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Col(j) => write!(f, "column {j}"),
        }
    }
}

/// A line of an order-n hypermatrix, identified by its two fixed coordinates
/// (1-based). Row lines vary the row index, column lines the column index,
/// vertical lines the plane index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperLine {
    Row { col: usize, plane: usize },
    Col { row: usize, plane: usize },
    Vertical { row: usize, col: usize },
}

impl fmt::Display for HyperLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperLine::Row { col, plane } => write!(f, "row line (column {col}, plane {plane})"),
            HyperLine::Col { row, plane } => write!(f, "column line (row {row}, plane {plane})"),
            HyperLine::Vertical { row, col } => write!(f, "vertical line ({row},{col})"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("bad shape: {detail}")]
    BadShape { detail: String },

    #[error("entry ({row},{col}) is {value}, outside the allowed range")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: BigInt,
    },

    #[error("{line} does not sum to 1")]
    LineSumNotOne { line: Line },

    #[error("non-zero entries of {line} do not alternate in sign")]
    LineNotAlternating { line: Line },

    #[error("difference matrix is not an alternating sign matrix: {source}")]
    NotAnAsm { source: Box<Error> },

    #[error("row {row} sums to {found}, expected {expected}")]
    BadRowSums {
        row: usize,
        expected: usize,
        found: BigInt,
    },

    #[error("row {row} is not strictly increasing")]
    RowNotStrict { row: usize },

    #[error("entry ({row},{col}) is {value}, outside 1..={order}")]
    ValueOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("interlacing violated at ({row},{col}): row {next} does not bracket the entry above", next = row + 1)]
    InterlacingViolated { row: usize, col: usize },

    #[error("entry {index} is {value}, expected non-negative")]
    NegativeEntry { index: usize, value: BigInt },

    #[error("entry {index} is {value}, expected positive")]
    NonPositiveEntry { index: usize, value: BigInt },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("infeasible margins: {detail}")]
    Infeasible { detail: String },

    #[error("vector is not majorized by ({order},...,2,1)")]
    NotMajorized { order: usize },

    #[error("trapezoid does not match the current triangle")]
    StaleTrapezoid,

    #[error("order {order} exceeds the exhaustive limit {limit}")]
    LimitExceeded { order: usize, limit: usize },

    #[error("negative partial sum in {line} over the {len} entries from the {end}", end = if *from_end { "end" } else { "start" })]
    NegativePartialSum {
        line: Line,
        len: usize,
        from_end: bool,
    },

    #[error("corner ({},{}) is outside an order-{order} matrix", corner.0, corner.1)]
    CornerOutOfRange { corner: (usize, usize), order: usize },

    #[error("matrix orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("weighted projections differ")]
    ProjectionMismatch,

    #[error("non-zero entries of {line} do not alternate starting and ending with +1")]
    HyperLineNotAlternating { line: HyperLine },

    #[error("plane {plane} is not an alternating sign matrix: {source}")]
    PlaneNotAsm { plane: usize, source: Box<Error> },

    #[error("parse error: {detail}")]
    Parse { detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(detail: impl Into<String>) -> Self {
        Error::Parse {
            detail: detail.into(),
        }
    }
}
