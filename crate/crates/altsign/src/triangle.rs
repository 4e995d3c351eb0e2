//! Triangular integer arrays: row-increasing triangles and monotone
//! triangles.
//!
//! A triangle of order `n` has rows `1..=n` where row `i` holds `i` entries
//! from `{1,...,n}`. The text format is: a first line holding `n`, then row
//! `i` as `i` whitespace-separated integers.
//!
//! Coordinates follow one convention everywhere in this crate: position
//! `(i,j)` is entry `j` of row `i` (0-based in code, 1-based in messages),
//! a north-east step goes `(i,j) -> (i-1,j)` and a south-east step goes
//! `(i,j) -> (i+1,j+1)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::vectors::IntVector;

/// A triangle whose rows are strictly increasing, with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowIncreasingTriangle {
    rows: Vec<Vec<usize>>,
}

/// Checks shape: row `i` (1-based) must hold exactly `i` entries.
fn check_shape(rows: &[Vec<usize>]) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::BadShape {
            detail: "a triangle needs at least one row".into(),
        });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != i + 1 {
            return Err(Error::BadShape {
                detail: format!("row {} has {} entries, expected {}", i + 1, row.len(), i + 1),
            });
        }
    }
    Ok(())
}

fn check_rows(rows: &[Vec<usize>]) -> Result<()> {
    check_shape(rows)?;
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::ValueOutOfRange {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                    order: n,
                });
            }
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::RowNotStrict { row: i + 1 });
        }
    }
    Ok(())
}

impl RowIncreasingTriangle {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_rows(&rows)?;
        Ok(RowIncreasingTriangle { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    /// Counts occurrences of each value: entry `k` of the result is the
    /// number of times `k+1` appears in the triangle.
    pub fn entry_multiset(&self) -> IntVector {
        let n = self.order();
        let mut counts = vec![0u64; n];
        for row in &self.rows {
            for &v in row {
                counts[v - 1] += 1;
            }
        }
        counts.into_iter().map(BigInt::from).collect()
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        Self::new(parse_triangle_rows(input)?)
    }

    pub fn to_text(&self) -> String {
        triangle_text(&self.rows)
    }
}

/// A row-increasing triangle that additionally interlaces: each entry is
/// bracketed by its two neighbours in the row below,
/// `t(i+1,j) <= t(i,j) <= t(i+1,j+1)`. Equivalently, entries weakly
/// increase along every north-east and south-east line. Monotone triangles
/// of order `n` are in bijection with the alternating sign matrices of
/// order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle(RowIncreasingTriangle);

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let inner = RowIncreasingTriangle::new(rows)?;
        for i in 0..inner.order() - 1 {
            for j in 0..=i {
                let upper = inner.entry(i, j);
                if inner.entry(i + 1, j) > upper || upper > inner.entry(i + 1, j + 1) {
                    return Err(Error::InterlacingViolated {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(MonotoneTriangle(inner))
    }

    pub fn row_increasing(&self) -> &RowIncreasingTriangle {
        &self.0
    }

    pub fn into_row_increasing(self) -> RowIncreasingTriangle {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.0.entry(i, j)
    }

    pub fn entry_multiset(&self) -> IntVector {
        self.0.entry_multiset()
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        Self::new(parse_triangle_rows(input)?)
    }

    pub fn to_text(&self) -> String {
        self.0.to_text()
    }
}

pub(crate) fn parse_triangle_rows(input: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::parse("empty triangle input"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("expected an order on the first line, got {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {n} triangle rows, got {i}")))?;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad triangle entry {tok:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::parse(format!("unexpected trailing content: {extra:?}")));
    }
    Ok(rows)
}

pub(crate) fn triangle_text(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
