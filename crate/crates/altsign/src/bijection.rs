//! The correspondence between alternating sign matrices, partial sum
//! matrices, and triangles.
//!
//! An ASM maps to its matrix of column prefix sums, which is a
//! `(0,1)`-matrix with row sums `(1,...,n)`; listing the positions of the
//! ones in each row gives a monotone triangle. Both steps invert, giving
//! the classical bijection between ASMs and monotone triangles.
//!
//! [`triangle_from_01`] works for any `(0,1)`-matrix with row sums
//! `(1,...,n)`, not only partial sum matrices, because margin
//! constructions generally produce matrices whose triangles are merely
//! row-increasing.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::asm::{Asm, PartialSumMatrix};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::triangle::{MonotoneTriangle, RowIncreasingTriangle};

/// Column prefix sums: `p(i,j) = sum of a(1..=i, j)`. Always a
/// `(0,1)`-matrix when `a` is an alternating sign matrix.
pub fn partial_sum(a: &Asm) -> PartialSumMatrix {
    let n = a.order();
    let mut out = IntMatrix::zero(n);
    for j in 0..n {
        let mut acc = BigInt::zero();
        for i in 0..n {
            acc += a.matrix().get(i, j);
            out.set(i, j, acc.clone());
        }
    }
    PartialSumMatrix::new(out).expect("prefix sums of an alternating sign matrix are 0/1")
}

/// Inverts [`partial_sum`] by row differencing: `a(i,j) = p(i,j) - p(i-1,j)`.
///
/// Fails with [`Error::NotAnAsm`] when the difference matrix is not an
/// alternating sign matrix, which happens for `(0,1)`-matrices with row
/// sums `(1,...,n)` that do not arise as prefix sums of any ASM.
pub fn asm_from_partial_sum(p: &PartialSumMatrix) -> Result<Asm> {
    let n = p.order();
    let mut out = IntMatrix::zero(n);
    for j in 0..n {
        let mut prev = BigInt::zero();
        for i in 0..n {
            let cur = p.matrix().get(i, j).clone();
            out.set(i, j, &cur - &prev);
            prev = cur;
        }
    }
    Asm::new(out).map_err(|e| Error::NotAnAsm { source: Box::new(e) })
}

/// Reads off the triangle of a `(0,1)`-matrix with row sums `(1,...,n)`:
/// row `i` of the triangle lists the columns holding ones in row `i`,
/// in ascending order.
pub fn triangle_from_01(m: &IntMatrix) -> Result<RowIncreasingTriangle> {
    let n = m.order();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut positions = Vec::with_capacity(i + 1);
        let mut sum = BigInt::zero();
        for j in 0..n {
            let e = m.get(i, j);
            if !e.is_zero() && !e.is_one() {
                return Err(Error::EntryOutOfRange {
                    row: i + 1,
                    col: j + 1,
                    value: e.clone(),
                });
            }
            sum += e;
            if e.is_one() {
                positions.push(j + 1);
            }
        }
        if positions.len() != i + 1 {
            return Err(Error::BadRowSums {
                row: i + 1,
                expected: i + 1,
                found: sum,
            });
        }
        rows.push(positions);
    }
    RowIncreasingTriangle::new(rows)
}

/// Inverts [`triangle_from_01`]: places a one at `(i, t(i,j))` for every
/// triangle entry.
pub fn matrix01_from_triangle(t: &RowIncreasingTriangle) -> IntMatrix {
    let n = t.order();
    let mut out = IntMatrix::zero(n);
    for (i, row) in t.rows().iter().enumerate() {
        for &v in row {
            out.set(i, v - 1, BigInt::one());
        }
    }
    out
}

/// The forward bijection: ASM to monotone triangle via the partial sum
/// matrix. Interlacing of the result is checked, not assumed.
pub fn monotone_from_asm(a: &Asm) -> MonotoneTriangle {
    let p = partial_sum(a);
    let t = triangle_from_01(p.matrix())
        .expect("a partial sum matrix has row sums (1..n)");
    MonotoneTriangle::new(t.rows().to_vec())
        .expect("the triangle of an alternating sign matrix interlaces")
}

/// The inverse bijection: monotone triangle to ASM. Interlacing guarantees
/// the difference matrix alternates; this is asserted by full validation
/// rather than trusted.
pub fn asm_from_monotone(t: &MonotoneTriangle) -> Asm {
    let m01 = matrix01_from_triangle(t.row_increasing());
    let p = PartialSumMatrix::new(m01)
        .expect("a triangle of order n yields row sums (1..n)");
    asm_from_partial_sum(&p)
        .expect("the difference matrix of a monotone triangle alternates")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn sample_asm() -> Asm {
        Asm::new(m(&[
            vec![0, 1, 0, 0],
            vec![1, -1, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn partial_sum_of_sample_asm() {
        let p = partial_sum(&sample_asm());
        let expected = m(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![1, 1, 1, 0],
            vec![1, 1, 1, 1],
        ]);
        assert_eq!(p.matrix(), &expected);
    }

    #[test]
    fn partial_sum_of_identity_is_lower_triangular() {
        let id = Asm::new(m(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        let p = partial_sum(&id);
        assert_eq!(
            p.matrix(),
            &m(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]])
        );
        assert_eq!(asm_from_partial_sum(&p).unwrap(), id);
    }

    #[test]
    fn partial_sum_of_diamond() {
        let diamond = Asm::new(m(&[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]])).unwrap();
        let p = partial_sum(&diamond);
        assert_eq!(
            p.matrix(),
            &m(&[vec![0, 1, 0], vec![1, 0, 1], vec![1, 1, 1]])
        );
        assert_eq!(
            monotone_from_asm(&diamond).rows(),
            &[vec![2], vec![1, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn differencing_recovers_sample_asm() {
        let a = sample_asm();
        assert_eq!(asm_from_partial_sum(&partial_sum(&a)).unwrap(), a);
    }

    #[test]
    fn not_every_psm_comes_from_an_asm() {
        let p = PartialSumMatrix::new(m(&[vec![1, 0, 0], vec![0, 1, 1], vec![1, 1, 1]])).unwrap();
        let err = asm_from_partial_sum(&p).unwrap_err();
        // Row 2 of the difference matrix is (-1, 1, 1): alternation fails.
        match err {
            Error::NotAnAsm { source } => {
                assert!(matches!(
                    *source,
                    Error::LineNotAlternating { line: crate::error::Line::Row(2) }
                ));
            }
            other => panic!("expected NotAnAsm, got {other:?}"),
        }
    }

    #[test]
    fn triangles_of_01_matrices() {
        let first = m(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 1, 0],
            vec![1, 1, 1, 0],
            vec![1, 1, 1, 1],
        ]);
        let t = triangle_from_01(&first).unwrap();
        assert_eq!(t.rows(), &[vec![1], vec![2, 3], vec![1, 2, 3], vec![1, 2, 3, 4]]);
        assert_eq!(matrix01_from_triangle(&t), first);

        let second = m(&[
            vec![0, 0, 1, 0],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 1],
            vec![1, 1, 1, 1],
        ]);
        let t = triangle_from_01(&second).unwrap();
        assert_eq!(t.rows(), &[vec![3], vec![1, 2], vec![2, 3, 4], vec![1, 2, 3, 4]]);
        assert_eq!(matrix01_from_triangle(&t), second);
    }

    #[test]
    fn bad_row_sums_rejected() {
        let err = triangle_from_01(&m(&[vec![1, 1], vec![1, 1]])).unwrap_err();
        assert!(matches!(err, Error::BadRowSums { row: 1, .. }));
    }

    #[test]
    fn monotone_of_sample_asm() {
        let t = monotone_from_asm(&sample_asm());
        assert_eq!(
            t.rows(),
            &[vec![2], vec![1, 3], vec![1, 2, 3], vec![1, 2, 3, 4]]
        );
        assert_eq!(asm_from_monotone(&t), sample_asm());
    }

    #[test]
    fn identity_round_trip() {
        let id = Asm::new(m(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        let t = monotone_from_asm(&id);
        assert_eq!(t.rows(), &[vec![1], vec![1, 2], vec![1, 2, 3]]);
        assert_eq!(asm_from_monotone(&t), id);
    }

    #[test]
    fn worked_seven_by_seven_monotone_to_asm() {
        let t = MonotoneTriangle::new(vec![
            vec![5],
            vec![4, 5],
            vec![4, 5, 6],
            vec![1, 5, 6, 7],
            vec![1, 2, 5, 6, 7],
            vec![1, 2, 4, 5, 6, 7],
            vec![1, 2, 3, 4, 5, 6, 7],
        ])
        .unwrap();
        let expected = Asm::new(m(&[
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![1, 0, 0, -1, 0, 0, 1],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
        ]))
        .unwrap();
        assert_eq!(asm_from_monotone(&t), expected);
        assert_eq!(monotone_from_asm(&expected), t);
    }
}
