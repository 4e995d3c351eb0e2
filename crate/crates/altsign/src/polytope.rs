//! Exact-rational membership in the alternating-sign-matrix polytope and
//! the two T-block decomposition algorithms.
//!
//! The polytope of order `n` consists of the real `n x n` matrices whose
//! rows and columns sum to 1 with all partial line sums (from either end)
//! non-negative; equivalently, the convex hull of the order-`n` ASMs. Any
//! two members differ by a signed combination of T-blocks, and they share
//! a weighted projection exactly when the difference is a combination of
//! opposite-depth T-block pairs. Everything here is exact: entries are
//! arbitrary-precision rationals and reconstruction checks are equalities,
//! never tolerances.
//!
//! File format: `{"n": N, "rows": [["p/q" | "p" | int, ...], ...]}`;
//! integers may be written without a slash. Term lists print one term per
//! line as `c T(i1,j1;i2,j2,s)` with an optional paired `S(...)`, indices
//! 1-based and `s` one of `+`/`-`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};
use crate::matrix::IntMatrix;

/// A square matrix of exact rationals, stored row-major and always reduced
/// (numerator/denominator coprime, denominator positive).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
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
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        let n = m.order();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| BigRational::from_integer(m.get(i, j).clone()))
            .collect();
        RationalMatrix { n, entries }
    }

    /// Back to integers, when every denominator is 1.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for j in 0..self.n {
                let e = self.get(i, j);
                if !e.denom().is_one() {
                    return None;
                }
                row.push(e.numer().clone());
            }
            rows.push(row);
        }
        Some(IntMatrix::from_rows(rows).expect("shape preserved"))
    }

    pub fn zero(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Entrywise difference `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn negate_in_place(&mut self) {
        for e in &mut self.entries {
            *e = -e.clone();
        }
    }

    /// The weighted projection with the same weights as the integer case.
    pub fn weighted_projection(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut v = vec![BigRational::zero(); n];
        for i in 0..n {
            let weight = BigRational::from_integer(BigInt::from((n - i) as u64));
            for (j, slot) in v.iter_mut().enumerate() {
                *slot += &weight * self.get(i, j);
            }
        }
        v
    }

    pub fn parse_json(input: &str) -> Result<Self> {
        let file: RationalFile = serde_json::from_str(input)
            .map_err(|e| Error::parse(format!("bad rational matrix document: {e}")))?;
        if file.rows.len() != file.n {
            return Err(Error::parse(format!(
                "declared order {} but found {} rows",
                file.n,
                file.rows.len()
            )));
        }
        let mut rows = Vec::with_capacity(file.n);
        for (i, row) in file.rows.into_iter().enumerate() {
            if row.len() != file.n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    expected: file.n,
                    found: row.len(),
                });
            }
            rows.push(
                row.into_iter()
                    .map(parse_rational_value)
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        RationalMatrix::from_rows(rows)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| format_rational(self.get(i, j))).collect())
            .collect();
        let file = serde_json::json!({ "n": self.n, "rows": rows });
        let mut out = serde_json::to_string_pretty(&file).expect("json serialization");
        out.push('\n');
        out
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFile {
    n: usize,
    rows: Vec<Vec<serde_json::Value>>,
}

fn parse_rational_value(v: serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else if let Some(u) = num.as_u64() {
                Ok(BigRational::from_integer(BigInt::from(u)))
            } else {
                Err(Error::parse(format!(
                    "entry {num} is not an integer; write rationals as \"p/q\""
                )))
            }
        }
        serde_json::Value::String(s) => parse_rational_str(&s),
        other => Err(Error::parse(format!("bad matrix entry {other}"))),
    }
}

pub(crate) fn parse_rational_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let numer: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad numerator {p:?}")))?;
    let denom: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad denominator {q:?}")))?;
    if denom.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A validated member of the ASM polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolytopeMatrix(RationalMatrix);

impl PolytopeMatrix {
    /// Validates line sums, then partial sums from both ends, rows before
    /// columns, reporting the first violation.
    pub fn new(m: RationalMatrix) -> Result<Self> {
        let n = m.order();
        let one = BigRational::one();
        for i in 0..n {
            let sum: BigRational = (0..n).map(|j| m.get(i, j).clone()).sum();
            if sum != one {
                return Err(Error::LineSumNotOne { line: Line::Row(i + 1) });
            }
        }
        for j in 0..n {
            let sum: BigRational = (0..n).map(|i| m.get(i, j).clone()).sum();
            if sum != one {
                return Err(Error::LineSumNotOne { line: Line::Col(j + 1) });
            }
        }
        for i in 0..n {
            check_partials((0..n).map(|j| m.get(i, j)), Line::Row(i + 1))?;
        }
        for j in 0..n {
            check_partials((0..n).map(|i| m.get(i, j)), Line::Col(j + 1))?;
        }
        Ok(PolytopeMatrix(m))
    }

    pub fn from_asm(a: &crate::asm::Asm) -> Self {
        PolytopeMatrix::new(RationalMatrix::from_int(a.matrix()))
            .expect("alternating sign matrices are polytope members")
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn weighted_projection(&self) -> Vec<BigRational> {
        self.0.weighted_projection()
    }
}

fn check_partials<'a>(
    entries: impl Iterator<Item = &'a BigRational>,
    line: Line,
) -> Result<()> {
    let values: Vec<&BigRational> = entries.collect();
    let mut acc = BigRational::zero();
    for (k, e) in values.iter().enumerate() {
        acc += *e;
        if acc.is_negative() {
            return Err(Error::NegativePartialSum {
                line,
                len: k + 1,
                from_end: false,
            });
        }
    }
    acc = BigRational::zero();
    for (k, e) in values.iter().rev().enumerate() {
        acc += *e;
        if acc.is_negative() {
            return Err(Error::NegativePartialSum {
                line,
                len: k + 1,
                from_end: true,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockSign {
    Plus,
    Minus,
}

impl BlockSign {
    fn factor(self) -> i64 {
        match self {
            BlockSign::Plus => 1,
            BlockSign::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            BlockSign::Plus => '+',
            BlockSign::Minus => '-',
        }
    }
}

/// A signed four-corner matrix: `+1` at `(row1,col1)` and `(row2,col2)`,
/// `-1` at `(row2,col1)` and `(row1,col2)`, all negated for a minus block.
///
/// Corner coordinates are 1-based, matching the printed term format, and
/// satisfy `row1 < row2`, `col1 < col2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TBlock {
    pub row1: usize,
    pub col1: usize,
    pub row2: usize,
    pub col2: usize,
    pub sign: BlockSign,
}

impl TBlock {
    pub fn new(row1: usize, col1: usize, row2: usize, col2: usize, sign: BlockSign) -> Result<Self> {
        if row1 == 0 || col1 == 0 || row1 >= row2 || col1 >= col2 {
            return Err(Error::BadShape {
                detail: format!(
                    "T-block corners must satisfy 1 <= i1 < i2 and 1 <= j1 < j2, got ({row1},{col1};{row2},{col2})"
                ),
            });
        }
        Ok(TBlock {
            row1,
            col1,
            row2,
            col2,
            sign,
        })
    }

    /// Depth: `row2 - row1` for a plus block, `row1 - row2` for a minus
    /// block. Opposite-depth pairs have projection-neutral sums.
    pub fn depth(&self) -> i64 {
        let span = (self.row2 - self.row1) as i64;
        span * self.sign.factor()
    }

    /// The block as an order-`n` integer matrix. Its weighted projection is
    /// `depth * (e_{col1} - e_{col2})`.
    pub fn matrix(&self, n: usize) -> Result<IntMatrix> {
        if self.row2 > n || self.col2 > n {
            return Err(Error::CornerOutOfRange {
                corner: (self.row2, self.col2),
                order: n,
            });
        }
        let f = BigInt::from(self.sign.factor());
        let mut m = IntMatrix::zero(n);
        m.set(self.row1 - 1, self.col1 - 1, f.clone());
        m.set(self.row2 - 1, self.col2 - 1, f.clone());
        m.set(self.row2 - 1, self.col1 - 1, -f.clone());
        m.set(self.row1 - 1, self.col2 - 1, -f);
        Ok(m)
    }
}

/// One term of a decomposition: a non-zero rational coefficient times a
/// T-block, or times a sum of two T-blocks of opposite depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TBlockTerm {
    pub coefficient: BigRational,
    pub block: TBlock,
    pub pair: Option<TBlock>,
}

impl TBlockTerm {
    pub fn single(coefficient: BigRational, block: TBlock) -> Self {
        assert!(!coefficient.is_zero(), "term coefficients are non-zero");
        TBlockTerm {
            coefficient,
            block,
            pair: None,
        }
    }

    pub fn paired(coefficient: BigRational, block: TBlock, pair: TBlock) -> Self {
        assert!(!coefficient.is_zero(), "term coefficients are non-zero");
        assert_eq!(
            block.depth(),
            -pair.depth(),
            "paired blocks must have opposite depth"
        );
        TBlockTerm {
            coefficient,
            block,
            pair: Some(pair),
        }
    }
}

fn first_nonzero_row_major(d: &RationalMatrix) -> Option<(usize, usize)> {
    let n = d.order();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !d.get(i, j).is_zero())
}

fn first_nonzero_col_major(d: &RationalMatrix) -> Option<(usize, usize)> {
    let n = d.order();
    (0..n)
        .flat_map(|j| (0..n).map(move |i| (i, j)))
        .find(|&(i, j)| !d.get(i, j).is_zero())
}

/// Subtracts `c` times the block from `d` in place.
fn subtract_scaled_block(d: &mut RationalMatrix, c: &BigRational, block: &TBlock) {
    let f = BigRational::from_integer(BigInt::from(block.sign.factor()));
    let (r1, c1, r2, c2) = (
        block.row1 - 1,
        block.col1 - 1,
        block.row2 - 1,
        block.col2 - 1,
    );
    let delta = c * &f;
    d.set(r1, c1, d.get(r1, c1) - &delta);
    d.set(r2, c2, d.get(r2, c2) - &delta);
    d.set(r2, c1, d.get(r2, c1) + &delta);
    d.set(r1, c2, d.get(r1, c2) + &delta);
}

/// Expresses `b` as `a` plus scalar multiples of T-blocks.
///
/// Scans the difference row-major for its first non-zero entry, cancels it
/// against the first opposite-sign entries in its row and column, and
/// repeats; the first non-zero strictly advances, so at most `n^2` terms
/// are emitted. Works for any two polytope members of equal order.
pub fn decompose_tblocks(a: &PolytopeMatrix, b: &PolytopeMatrix) -> Result<Vec<TBlockTerm>> {
    let n = a.order();
    if n != b.order() {
        return Err(Error::OrderMismatch {
            left: n,
            right: b.order(),
        });
    }
    let mut d = b.matrix().sub(a.matrix())?;
    let mut terms = Vec::new();
    let mut steps = 0usize;
    while let Some((i, j)) = first_nonzero_row_major(&d) {
        steps += 1;
        assert!(steps <= n * n, "first non-zero must advance every step");
        let lead = d.get(i, j).clone();
        let j2 = ((j + 1)..n)
            .find(|&c| !d.get(i, c).is_zero() && d.get(i, c).is_positive() != lead.is_positive())
            .expect("zero row sum provides an opposite-sign entry right of the lead");
        let i2 = ((i + 1)..n)
            .find(|&r| !d.get(r, j).is_zero() && d.get(r, j).is_positive() != lead.is_positive())
            .expect("zero column sum provides an opposite-sign entry below the lead");
        let block = TBlock::new(i + 1, j + 1, i2 + 1, j2 + 1, BlockSign::Plus)
            .expect("scan order yields increasing corners");
        subtract_scaled_block(&mut d, &lead, &block);
        terms.push(TBlockTerm::single(lead, block));
    }
    Ok(terms)
}

/// Expresses `b` as `a` plus scalar multiples of opposite-depth T-block
/// pairs. Requires `a` and `b` to have equal weighted projections; said
/// projection equality is exactly what makes the construction possible,
/// and unequal projections are rejected up front.
///
/// Scans the difference column-major. When the leading non-zero is
/// negative the whole difference is negated and subsequent coefficients
/// flip sign, so the core step always sees a positive lead.
pub fn decompose_paired(a: &PolytopeMatrix, b: &PolytopeMatrix) -> Result<Vec<TBlockTerm>> {
    let n = a.order();
    if n != b.order() {
        return Err(Error::OrderMismatch {
            left: n,
            right: b.order(),
        });
    }
    if a.weighted_projection() != b.weighted_projection() {
        return Err(Error::ProjectionMismatch);
    }
    let mut d = b.matrix().sub(a.matrix())?;
    let mut flipped = false;
    let mut terms = Vec::new();
    let mut steps = 0usize;
    while let Some((i, j)) = first_nonzero_col_major(&d) {
        steps += 1;
        assert!(steps <= n * n, "first non-zero must advance every step");
        if d.get(i, j).is_negative() {
            d.negate_in_place();
            flipped = !flipped;
        }
        let lead = d.get(i, j).clone();
        let i2 = ((i + 1)..n)
            .find(|&r| d.get(r, j).is_negative())
            .expect("zero column sum provides a negative entry below the lead");
        let p = ((i2 + 1)..n)
            .find(|&r| d.get(r, j).is_positive())
            .expect("zero weighted projection provides a second positive entry below");
        let p2 = p - (i2 - i);
        let j2 = (0..n)
            .find(|&c| d.get(i, c).is_negative())
            .expect("zero row sum provides a negative entry in the lead row");
        let t = TBlock::new(i + 1, j + 1, i2 + 1, j2 + 1, BlockSign::Plus)
            .expect("scan order yields increasing corners");
        let s = TBlock::new(p2 + 1, j + 1, p + 1, j2 + 1, BlockSign::Minus)
            .expect("row order of the mirror block follows from the scan");
        subtract_scaled_block(&mut d, &lead, &t);
        subtract_scaled_block(&mut d, &lead, &s);
        let coefficient = if flipped { -lead } else { lead };
        terms.push(TBlockTerm::paired(coefficient, t, s));
    }
    Ok(terms)
}

/// Applies `a + sum c_k * (block [+ pair])` exactly. The result is a plain
/// rational matrix: term lists need not stay inside the polytope.
pub fn apply_terms(a: &PolytopeMatrix, terms: &[TBlockTerm]) -> Result<RationalMatrix> {
    let n = a.order();
    let mut out = a.matrix().clone();
    for term in terms {
        for block in std::iter::once(&term.block).chain(term.pair.as_ref()) {
            if block.row2 > n || block.col2 > n {
                return Err(Error::CornerOutOfRange {
                    corner: (block.row2, block.col2),
                    order: n,
                });
            }
            subtract_scaled_block(&mut out, &(-term.coefficient.clone()), block);
        }
    }
    Ok(out)
}

/// One term per line: `c T(i1,j1;i2,j2,s)` with an optional ` S(...)`.
pub fn format_terms(terms: &[TBlockTerm]) -> String {
    let mut out = String::new();
    for term in terms {
        out.push_str(&format_rational(&term.coefficient));
        out.push(' ');
        out.push_str(&format_block('T', &term.block));
        if let Some(pair) = &term.pair {
            out.push(' ');
            out.push_str(&format_block('S', pair));
        }
        out.push('\n');
    }
    out
}

fn format_block(tag: char, b: &TBlock) -> String {
    format!(
        "{tag}({},{};{},{},{})",
        b.row1,
        b.col1,
        b.row2,
        b.col2,
        b.sign.symbol()
    )
}

pub fn parse_terms(input: &str) -> Result<Vec<TBlockTerm>> {
    let mut terms = Vec::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let coeff = parse_rational_str(
            tokens
                .next()
                .ok_or_else(|| Error::parse("missing coefficient"))?,
        )?;
        if coeff.is_zero() {
            return Err(Error::parse(format!("zero coefficient in {line:?}")));
        }
        let block = parse_block(
            tokens
                .next()
                .ok_or_else(|| Error::parse("missing T(...) block"))?,
            'T',
        )?;
        let pair = match tokens.next() {
            Some(tok) => Some(parse_block(tok, 'S')?),
            None => None,
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::parse(format!("unexpected token {extra:?}")));
        }
        if let Some(pair) = pair {
            if block.depth() != -pair.depth() {
                return Err(Error::parse(format!(
                    "paired blocks must have opposite depth in {line:?}"
                )));
            }
            terms.push(TBlockTerm::paired(coeff, block, pair));
        } else {
            terms.push(TBlockTerm::single(coeff, block));
        }
    }
    Ok(terms)
}

fn parse_block(token: &str, tag: char) -> Result<TBlock> {
    let inner = token
        .strip_prefix(tag)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(format!("expected {tag}(i1,j1;i2,j2,s), got {token:?}")))?;
    let (corners, sign) = inner
        .rsplit_once(',')
        .ok_or_else(|| Error::parse(format!("missing sign in {token:?}")))?;
    let sign = match sign.trim() {
        "+" => BlockSign::Plus,
        "-" => BlockSign::Minus,
        other => return Err(Error::parse(format!("bad block sign {other:?}"))),
    };
    let (first, second) = corners
        .split_once(';')
        .ok_or_else(|| Error::parse(format!("expected two corners in {token:?}")))?;
    let parse_pair = |s: &str| -> Result<(usize, usize)> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("bad corner {s:?}")))?;
        Ok((
            a.trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad corner index {a:?}")))?,
            b.trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad corner index {b:?}")))?,
        ))
    };
    let (r1, c1) = parse_pair(first)?;
    let (r2, c2) = parse_pair(second)?;
    TBlock::new(r1, c1, r2, c2, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::Asm;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn rational(rows: &[&[(i64, i64)]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn diamond() -> PolytopeMatrix {
        let a = Asm::new(
            IntMatrix::from_i64_rows(&[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap(),
        )
        .unwrap();
        PolytopeMatrix::from_asm(&a)
    }

    fn uniform_third() -> RationalMatrix {
        rational(&[
            &[(1, 3), (1, 3), (1, 3)],
            &[(1, 3), (1, 3), (1, 3)],
            &[(1, 3), (1, 3), (1, 3)],
        ])
    }

    fn sixteenth() -> RationalMatrix {
        rational(&[
            &[(1, 16), (3, 4), (3, 16)],
            &[(7, 8), (-1, 2), (5, 8)],
            &[(1, 16), (3, 4), (3, 16)],
        ])
    }

    #[test]
    fn uniform_matrix_is_member() {
        let m = PolytopeMatrix::new(uniform_third()).unwrap();
        let two = rat(2, 1);
        assert!(m.weighted_projection().iter().all(|x| *x == two));
    }

    #[test]
    fn asms_are_members() {
        diamond();
    }

    #[test]
    fn example_members_validate_with_flat_projection() {
        let members = [
            uniform_third(),
            rational(&[
                &[(1, 3), (1, 4), (5, 12)],
                &[(1, 3), (1, 2), (1, 6)],
                &[(1, 3), (1, 4), (5, 12)],
            ]),
            rational(&[
                &[(1, 6), (2, 3), (1, 6)],
                &[(2, 3), (-1, 3), (2, 3)],
                &[(1, 6), (2, 3), (1, 6)],
            ]),
            sixteenth(),
        ];
        let two = rat(2, 1);
        for m in members {
            let p = PolytopeMatrix::new(m).unwrap();
            assert!(p.weighted_projection().iter().all(|x| *x == two));
        }
    }

    #[test]
    fn leading_negative_partial_sum_rejected() {
        let m = rational(&[
            &[(1, 1), (0, 1), (0, 1)],
            &[(-1, 1), (1, 1), (1, 1)],
            &[(1, 1), (0, 1), (0, 1)],
        ]);
        let err = PolytopeMatrix::new(m).unwrap_err();
        assert!(matches!(
            err,
            Error::NegativePartialSum { line: Line::Row(2), len: 1, from_end: false }
        ));
    }

    #[test]
    fn bad_line_sum_rejected() {
        let m = rational(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 1)]]);
        assert!(matches!(
            PolytopeMatrix::new(m),
            Err(Error::LineSumNotOne { line: Line::Row(1) })
        ));
    }

    #[test]
    fn tblock_matrix_and_projection() {
        let b = TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap();
        let m = b.matrix(3).unwrap();
        let expected =
            IntMatrix::from_i64_rows(&[vec![1, -1, 0], vec![-1, 1, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.weighted_projection(), crate::vectors::from_i64(&[1, -1, 0]));
        assert_eq!(b.depth(), 1);

        let neg = TBlock::new(2, 1, 3, 2, BlockSign::Minus).unwrap();
        assert_eq!(neg.depth(), -1);
        // A minus block is the negation of the plus block.
        let pos = TBlock::new(2, 1, 3, 2, BlockSign::Plus).unwrap();
        let pm = pos.matrix(3).unwrap();
        let nm = neg.matrix(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(nm.get(i, j), &(-pm.get(i, j)));
            }
        }

        assert!(matches!(
            TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap().matrix(1),
            Err(Error::CornerOutOfRange { .. })
        ));
        assert!(TBlock::new(2, 1, 1, 2, BlockSign::Plus).is_err());
    }

    #[test]
    fn tblock_identity_reaches_uniform_third() {
        // A + 1/3 (T(1,1;2,2) - T(1,2;2,3) + T(2,2;3,3) - T(2,1;3,2))
        let a = diamond();
        let third = rat(1, 3);
        let terms = vec![
            TBlockTerm::single(third.clone(), TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap()),
            TBlockTerm::single(third.clone(), TBlock::new(1, 2, 2, 3, BlockSign::Minus).unwrap()),
            TBlockTerm::single(third.clone(), TBlock::new(2, 2, 3, 3, BlockSign::Plus).unwrap()),
            TBlockTerm::single(third, TBlock::new(2, 1, 3, 2, BlockSign::Minus).unwrap()),
        ];
        assert_eq!(apply_terms(&a, &terms).unwrap(), uniform_third());
    }

    #[test]
    fn paired_identity_reaches_sixteenth() {
        // A + 1/16 (T(1,1;2,2) - T(2,1;3,2)) + 3/16 (T(2,2;3,3) - T(1,2;2,3)),
        // written as opposite-depth pairs.
        let a = diamond();
        let terms = vec![
            TBlockTerm::paired(
                rat(1, 16),
                TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap(),
                TBlock::new(2, 1, 3, 2, BlockSign::Minus).unwrap(),
            ),
            TBlockTerm::paired(
                rat(3, 16),
                TBlock::new(2, 2, 3, 3, BlockSign::Plus).unwrap(),
                TBlock::new(1, 2, 2, 3, BlockSign::Minus).unwrap(),
            ),
        ];
        assert_eq!(apply_terms(&a, &terms).unwrap(), sixteenth());
    }

    #[test]
    fn decompose_reconstructs_uniform_third() {
        let a = diamond();
        let b = PolytopeMatrix::new(uniform_third()).unwrap();
        let terms = decompose_tblocks(&a, &b).unwrap();
        assert!(terms.len() <= 9);
        assert_eq!(apply_terms(&a, &terms).unwrap(), *b.matrix());
    }

    #[test]
    fn decompose_identical_inputs_is_empty() {
        let a = diamond();
        assert!(decompose_tblocks(&a, &a).unwrap().is_empty());
        assert!(decompose_paired(&a, &a).unwrap().is_empty());
    }

    #[test]
    fn decompose_two_by_two_permutations() {
        let swap = Asm::new(IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()).unwrap();
        let id = Asm::new(IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        let a = PolytopeMatrix::from_asm(&swap);
        let b = PolytopeMatrix::from_asm(&id);
        let terms = decompose_tblocks(&a, &b).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient, rat(1, 1));
        assert_eq!(terms[0].block, TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap());
        assert_eq!(apply_terms(&a, &terms).unwrap(), *b.matrix());
    }

    #[test]
    fn paired_decomposition_of_sixteenth_lands_on_known_pairs() {
        let a = diamond();
        let b = PolytopeMatrix::new(sixteenth()).unwrap();
        let terms = decompose_paired(&a, &b).unwrap();
        assert_eq!(apply_terms(&a, &terms).unwrap(), *b.matrix());
        for term in &terms {
            let pair = term.pair.as_ref().unwrap();
            assert_eq!(term.block.depth(), -pair.depth());
        }
        // This particular instance lands exactly on the known minimal pairs.
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].coefficient, rat(1, 16));
        assert_eq!(terms[0].block, TBlock::new(1, 1, 2, 2, BlockSign::Plus).unwrap());
        assert_eq!(terms[0].pair, Some(TBlock::new(2, 1, 3, 2, BlockSign::Minus).unwrap()));
        assert_eq!(terms[1].coefficient, rat(-3, 16));
        assert_eq!(terms[1].block, TBlock::new(1, 2, 2, 3, BlockSign::Plus).unwrap());
        assert_eq!(terms[1].pair, Some(TBlock::new(2, 2, 3, 3, BlockSign::Minus).unwrap()));
    }

    #[test]
    fn paired_rejects_unequal_projections() {
        let a = diamond();
        let id = Asm::new(
            IntMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap(),
        )
        .unwrap();
        let b = PolytopeMatrix::from_asm(&id);
        assert!(matches!(
            decompose_paired(&a, &b),
            Err(Error::ProjectionMismatch)
        ));
    }

    #[test]
    fn apply_empty_terms_is_identity() {
        let a = diamond();
        assert_eq!(apply_terms(&a, &[]).unwrap(), *a.matrix());
    }

    #[test]
    fn corner_addition_swaps_identity() {
        let id = Asm::new(IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        let a = PolytopeMatrix::from_asm(&id);
        // Adding the minus block at the four corners turns the identity
        // into the swap permutation.
        let term = TBlockTerm::single(
            rat(1, 1),
            TBlock::new(1, 1, 2, 2, BlockSign::Minus).unwrap(),
        );
        let out = apply_terms(&a, &[term]).unwrap();
        let swap = RationalMatrix::from_int(
            &IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap(),
        );
        assert_eq!(out, swap);
    }

    #[test]
    fn opposite_depth_pairs_leave_projection_unchanged() {
        let t = TBlock::new(1, 2, 2, 3, BlockSign::Plus).unwrap();
        let s = TBlock::new(2, 2, 3, 3, BlockSign::Minus).unwrap();
        assert_eq!(t.depth(), -s.depth());
        let sum: Vec<BigInt> = t
            .matrix(4)
            .unwrap()
            .weighted_projection()
            .iter()
            .zip(s.matrix(4).unwrap().weighted_projection())
            .map(|(x, y)| x + y)
            .collect();
        assert!(sum.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn term_format_round_trip() {
        let terms = vec![
            TBlockTerm::paired(
                rat(-3, 16),
                TBlock::new(1, 2, 2, 3, BlockSign::Plus).unwrap(),
                TBlock::new(2, 2, 3, 3, BlockSign::Minus).unwrap(),
            ),
            TBlockTerm::single(rat(2, 1), TBlock::new(1, 1, 3, 4, BlockSign::Minus).unwrap()),
        ];
        let text = format_terms(&terms);
        assert_eq!(parse_terms(&text).unwrap(), terms);
        assert!(text.contains("-3/16 T(1,2;2,3,+) S(2,2;3,3,-)"));
        assert!(text.contains("2 T(1,1;3,4,-)"));
    }

    #[test]
    fn json_round_trip() {
        let m = sixteenth();
        let parsed = RationalMatrix::parse_json(&m.to_json()).unwrap();
        assert_eq!(parsed, m);

        let mixed = r#"{"n": 2, "rows": [[1, "0"], ["0/5", "1/1"]]}"#;
        let parsed = RationalMatrix::parse_json(mixed).unwrap();
        assert_eq!(parsed, RationalMatrix::from_int(
            &IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap()
        ));

        assert!(RationalMatrix::parse_json(r#"{"n": 1, "rows": [[0.5]]}"#).is_err());
        assert!(RationalMatrix::parse_json(r#"{"n": 1, "rows": [["1/0"]]}"#).is_err());
    }
}
