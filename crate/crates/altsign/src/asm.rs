//! Alternating sign matrices and partial sum matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Line, Result};
use crate::matrix::IntMatrix;
use crate::vectors::IntVector;

/// A square `{-1,0,+1}` matrix in which the non-zero entries of every row
/// and column alternate in sign and sum to 1. It follows that the first and
/// last non-zero entry of each line is `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm(IntMatrix);

impl Asm {
    /// Validates a matrix as an alternating sign matrix.
    ///
    /// Checks, in order: every entry lies in `{-1,0,1}`; every row sums
    /// to 1 and alternates; every column sums to 1 and alternates.
    pub fn new(m: IntMatrix) -> Result<Asm> {
        let n = m.order();
        for i in 0..n {
            for j in 0..n {
                let e = m.get(i, j);
                if e.abs() > BigInt::one() {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: e.clone(),
                    });
                }
            }
        }
        for i in 0..n {
            check_asm_line(m.row(i).iter(), Line::Row(i + 1))?;
        }
        for j in 0..n {
            check_asm_line(m.col(j).iter(), Line::Col(j + 1))?;
        }
        Ok(Asm(m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Entry at 0-based `(i, j)` as a machine integer; entries are
    /// guaranteed to fit.
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        let e = self.0.get(i, j);
        if e.is_zero() {
            0
        } else if e.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn weighted_projection(&self) -> IntVector {
        self.0.weighted_projection()
    }
}

/// Checks that a line sums to 1 and that its non-zero entries alternate in
/// sign. The sum is checked first, so `(+1,+1)` reports a bad sum rather
/// than failed alternation.
fn check_asm_line<'a>(entries: impl Iterator<Item = &'a BigInt>, line: Line) -> Result<()> {
    let mut sum = BigInt::zero();
    let mut last_sign: Option<bool> = None;
    let mut alternates = true;
    for e in entries {
        sum += e;
        if !e.is_zero() {
            let positive = e.is_positive();
            if last_sign == Some(positive) {
                alternates = false;
            }
            last_sign = Some(positive);
        }
    }
    if !sum.is_one() {
        return Err(Error::LineSumNotOne { line });
    }
    if !alternates {
        return Err(Error::LineNotAlternating { line });
    }
    Ok(())
}

/// The matrix of column prefix sums of an alternating sign matrix: a
/// `(0,1)`-matrix whose row `i` contains exactly `i` ones.
///
/// Not every such matrix arises from an ASM; differencing rows may fail to
/// alternate. See [`crate::bijection::asm_from_partial_sum`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSumMatrix(IntMatrix);

impl PartialSumMatrix {
    pub fn new(m: IntMatrix) -> Result<PartialSumMatrix> {
        let n = m.order();
        for i in 0..n {
            for j in 0..n {
                let e = m.get(i, j);
                if !e.is_zero() && !e.is_one() {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: e.clone(),
                    });
                }
            }
        }
        for i in 0..n {
            let sum: BigInt = m.row(i).iter().sum();
            if sum != BigInt::from((i + 1) as u64) {
                return Err(Error::BadRowSums {
                    row: i + 1,
                    expected: i + 1,
                    found: sum,
                });
            }
        }
        Ok(PartialSumMatrix(m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }
}
