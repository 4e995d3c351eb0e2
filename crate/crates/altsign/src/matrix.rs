//! Square matrices of arbitrary-precision integers and the weighted
//! projection map.
//!
//! The text format for a matrix is: a first line holding the order `n`,
//! followed by `n` lines of `n` whitespace-separated integers. On input,
//! bare `+` and `-` are accepted as aliases for `1` and `-1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::vectors::IntVector;

/// A square matrix of exact integers, stored row-major.
///
/// Rows and columns are 1-based in every error message and file format;
/// the accessors here take 0-based indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from rows, rejecting ragged or non-square input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reverses the row order: row `i` becomes row `n+1-i`.
    pub fn reflect_vertical(&self) -> Self {
        let mut rows: Vec<Vec<BigInt>> = self.rows().map(|r| r.to_vec()).collect();
        rows.reverse();
        IntMatrix::from_rows(rows).expect("reflection preserves shape")
    }

    /// The weighted projection: entry `j` is `sum_i (n+1-i) * m(i,j)`,
    /// i.e. the column sums after weighting row `i` by `n+1-i`.
    ///
    /// Defined for any square integer matrix, not only alternating sign
    /// matrices, so differences of matrices can be projected too.
    pub fn weighted_projection(&self) -> IntVector {
        let n = self.n;
        let mut v = vec![BigInt::zero(); n];
        for i in 0..n {
            let weight = BigInt::from((n - i) as u64);
            for (j, slot) in v.iter_mut().enumerate() {
                *slot += &weight * self.get(i, j);
            }
        }
        v
    }

    /// Parses the text format. `+` and `-` are aliases for `1` and `-1`.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("empty matrix input"))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("expected an order on the first line, got {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(format!("expected {n} matrix rows, got {i}")))?;
            let row = line
                .split_whitespace()
                .map(parse_entry)
                .collect::<Result<Vec<BigInt>>>()?;
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::parse(format!("unexpected trailing content: {extra:?}")));
        }
        IntMatrix::from_rows(rows)
    }

    /// Renders the text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn parse_entry(token: &str) -> Result<BigInt> {
    match token {
        "+" => Ok(BigInt::from(1)),
        "-" => Ok(BigInt::from(-1)),
        _ => token
            .parse()
            .map_err(|_| Error::parse(format!("bad matrix entry {token:?}"))),
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix(order {})", self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}
