//! Majorization arithmetic and margin-constrained `(0,1)`-matrix
//! construction.
//!
//! The feasibility criterion is the classical one: a `(0,1)`-matrix with
//! prescribed row and column sums exists exactly when the column sums are
//! majorized by the conjugate of the row sums (totals equal). For row sums
//! `(1,...,n)` — the case every triangle construction here needs — the
//! conjugate of `(n,...,2,1)` is itself, so feasibility reduces to
//! majorization by the staircase.

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::vectors::{self, IntVector};

/// The conjugate of a non-negative vector: entry `k` (for `k = 1..=n`)
/// counts the entries of `x` that are `>= k`.
pub fn conjugate(x: &[BigInt], n: usize) -> Result<IntVector> {
    for (idx, v) in x.iter().enumerate() {
        if v.is_negative() {
            return Err(Error::NegativeEntry {
                index: idx + 1,
                value: v.clone(),
            });
        }
    }
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let bound = BigInt::from(k as u64);
        let count = x.iter().filter(|v| **v >= bound).count();
        out.push(BigInt::from(count as u64));
    }
    Ok(out)
}

/// Majorization `x ⪯ y`: after sorting both descending, every prefix sum
/// of `x` is at most the corresponding prefix sum of `y`, with equality
/// for the full sums.
pub fn majorized_by(x: &[BigInt], y: &[BigInt]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    ys.sort_unstable_by(|a, b| b.cmp(a));
    let mut px = BigInt::zero();
    let mut py = BigInt::zero();
    for (a, b) in xs.iter().zip(ys.iter()) {
        px += a;
        py += b;
        if px > py {
            return Ok(false);
        }
    }
    Ok(px == py)
}

/// Whether a `(0,1)`-matrix with the given row and column sums exists.
/// Negative entries are infeasible outright.
pub fn gale_ryser_feasible(row_sums: &[BigInt], col_sums: &[BigInt]) -> bool {
    if row_sums.iter().chain(col_sums.iter()).any(|v| v.is_negative()) {
        return false;
    }
    let conj = conjugate(row_sums, col_sums.len()).expect("entries checked non-negative");
    // The conjugate truncated at the column count only loses mass when some
    // row sum exceeds the number of columns, which is infeasible anyway and
    // surfaces as a total mismatch.
    let lost = row_sums.iter().any(|r| *r > BigInt::from(col_sums.len() as u64));
    if lost {
        return false;
    }
    majorized_by(col_sums, &conj).expect("conjugate has the requested length")
}

/// Builds a `(0,1)`-matrix with row sums exactly `(1,2,...,n)` from top to
/// bottom and column sums exactly `col_sums`.
///
/// The fill is a deterministic greedy: rows are processed from `n` ones
/// down to `1`, each row placing its ones in the columns with the largest
/// residual demand (ties broken by the smaller column index); the finished
/// rows are then reversed so row sums ascend. Which witness is produced is
/// an implementation detail — only the margins are contractual.
pub fn construct_01_matrix(col_sums: &[BigInt]) -> Result<IntMatrix> {
    let n = col_sums.len();
    for (idx, v) in col_sums.iter().enumerate() {
        if !v.is_positive() {
            return Err(Error::NonPositiveEntry {
                index: idx + 1,
                value: v.clone(),
            });
        }
    }
    if !majorized_by(col_sums, &vectors::staircase(n))? {
        return Err(Error::Infeasible {
            detail: format!(
                "column sums ({}) are not majorized by ({})",
                vectors::to_csv(col_sums),
                vectors::to_csv(&vectors::staircase(n))
            ),
        });
    }

    let mut demand: Vec<BigInt> = col_sums.to_vec();
    let mut rows_desc: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in (1..=n).rev() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&j| (Reverse(demand[j].clone()), j));
        let mut row = vec![BigInt::zero(); n];
        for &j in order.iter().take(r) {
            row[j] = BigInt::from(1);
            demand[j] -= 1;
        }
        rows_desc.push(row);
    }
    assert!(
        demand.iter().all(|d| d.is_zero()),
        "greedy fill must exhaust feasible column demands"
    );
    rows_desc.reverse();
    let out = IntMatrix::from_rows(rows_desc).expect("fill is square by construction");
    debug_assert!(margins_ok(&out, col_sums));
    Ok(out)
}

fn margins_ok(m: &IntMatrix, col_sums: &[BigInt]) -> bool {
    let n = m.order();
    (0..n).all(|i| vectors::sum(m.row(i)) == BigInt::from((i + 1) as u64))
        && (0..n).all(|j| vectors::sum(&m.col(j)) == col_sums[j])
}
