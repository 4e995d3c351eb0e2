//! Alternating sign hypermatrices and their weighted-plane images.
//!
//! An order-`n` alternating sign hypermatrix (ASHM) is an `n x n x n`
//! `{-1,0,1}` array in which the non-zero entries of every row line,
//! column line, and vertical line alternate in sign, starting and ending
//! with `+1`. Each horizontal plane is then an alternating sign matrix.
//! Weighting plane `k` by `k` and summing yields an `n x n` array of
//! positive integers `L(i,j) = sum_k k * a(i,j,k)` — the Latin-like square
//! of the hypermatrix ([`Ashl`]); when the planes are disjoint permutation
//! matrices this is an ordinary Latin square.
//!
//! Two serializations exist: a JSON document `{"n": N, "planes": [...]}`
//! listing the planes from weight 1 upward, and the grid notation, an
//! `n x n` text grid whose cell `(i,j)` concatenates the signed weights of
//! the non-zero entries on that vertical line in ascending order (e.g.
//! `+1-2+3`; a leading `+` may be omitted on input).

use num_bigint::BigInt;

use crate::asm::Asm;
use crate::error::{Error, HyperLine, Result};
use crate::gale_ryser;
use crate::matrix::IntMatrix;
use crate::vectors;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ashm {
    n: usize,
    /// entries[(i*n + j)*n + k] = a(i,j,k), all 0-based.
    entries: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct AshmFile {
    n: usize,
    planes: Vec<Vec<Vec<i64>>>,
}

impl Ashm {
    /// Validates a cubical array given as planes (plane `k` carries
    /// weight `k`, listed from 1 upward).
    pub fn from_planes(planes: Vec<Vec<Vec<i64>>>) -> Result<Ashm> {
        let n = planes.len();
        if n == 0 {
            return Err(Error::BadShape {
                detail: "a hypermatrix needs at least one plane".into(),
            });
        }
        for (k, plane) in planes.iter().enumerate() {
            if plane.len() != n || plane.iter().any(|row| row.len() != n) {
                return Err(Error::BadShape {
                    detail: format!("plane {} is not {n}x{n}", k + 1),
                });
            }
        }
        let mut entries = vec![0i8; n * n * n];
        for (k, plane) in planes.iter().enumerate() {
            for (i, row) in plane.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if !(-1..=1).contains(&v) {
                        return Err(Error::BadShape {
                            detail: format!(
                                "entry ({},{},{}) is {v}, expected -1, 0, or 1",
                                i + 1,
                                j + 1,
                                k + 1
                            ),
                        });
                    }
                    entries[(i * n + j) * n + k] = v as i8;
                }
            }
        }
        let ashm = Ashm { n, entries };
        ashm.check_lines()?;
        // Redundant with the row/column line checks, kept as a cross-check.
        for k in 0..n {
            Asm::new(ashm.plane(k)).map_err(|e| Error::PlaneNotAsm {
                plane: k + 1,
                source: Box::new(e),
            })?;
        }
        Ok(ashm)
    }

    fn check_lines(&self) -> Result<()> {
        let n = self.n;
        for j in 0..n {
            for k in 0..n {
                if !alternating_line((0..n).map(|i| self.get(i, j, k))) {
                    return Err(Error::HyperLineNotAlternating {
                        line: HyperLine::Row { col: j + 1, plane: k + 1 },
                    });
                }
            }
        }
        for i in 0..n {
            for k in 0..n {
                if !alternating_line((0..n).map(|j| self.get(i, j, k))) {
                    return Err(Error::HyperLineNotAlternating {
                        line: HyperLine::Col { row: i + 1, plane: k + 1 },
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !alternating_line((0..n).map(|k| self.get(i, j, k))) {
                    return Err(Error::HyperLineNotAlternating {
                        line: HyperLine::Vertical { row: i + 1, col: j + 1 },
                    });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `a(i,j,k)`, all 0-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        self.entries[(i * self.n + j) * self.n + k]
    }

    /// Horizontal plane `k` (0-based) as a matrix.
    pub fn plane(&self, k: usize) -> IntMatrix {
        let n = self.n;
        IntMatrix::from_i64_rows(
            &(0..n)
                .map(|i| (0..n).map(|j| self.get(i, j, k) as i64).collect())
                .collect::<Vec<_>>(),
        )
        .expect("planes are square")
    }

    /// The weighted plane sum `L(i,j) = sum_k (k+1) * a(i,j,k)`.
    pub fn ashl(&self) -> Ashl {
        let n = self.n;
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: i64 = 0;
                for k in 0..n {
                    acc += (k as i64 + 1) * self.get(i, j, k) as i64;
                }
                m.set(i, j, BigInt::from(acc));
            }
        }
        Ashl::new(m).expect("weighted plane sums of a valid hypermatrix are in range")
    }

    /// Grid notation: one line per row, cells separated by single spaces,
    /// each cell the signed weights of its vertical line ascending, e.g.
    /// `+1-2+3`. Parses back via [`Ashm::parse_grid`].
    pub fn grid_notation(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        for i in 0..n {
            let cells: Vec<String> = (0..n)
                .map(|j| {
                    let mut cell = String::new();
                    for k in 0..n {
                        match self.get(i, j, k) {
                            1 => cell.push_str(&format!("+{}", k + 1)),
                            -1 => cell.push_str(&format!("-{}", k + 1)),
                            _ => {}
                        }
                    }
                    cell
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses grid notation. The order is the line count; cell terms may
    /// omit a leading `+`.
    pub fn parse_grid(input: &str) -> Result<Ashm> {
        let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
        let n = lines.len();
        if n == 0 {
            return Err(Error::parse("empty grid"));
        }
        let mut planes = vec![vec![vec![0i64; n]; n]; n];
        for (i, line) in lines.iter().enumerate() {
            let cells: Vec<&str> = line.split_whitespace().collect();
            if cells.len() != n {
                return Err(Error::parse(format!(
                    "grid row {} has {} cells, expected {n}",
                    i + 1,
                    cells.len()
                )));
            }
            for (j, cell) in cells.iter().enumerate() {
                for (k, sign) in parse_grid_cell(cell, n)? {
                    if planes[k - 1][i][j] != 0 {
                        return Err(Error::parse(format!(
                            "duplicate weight {k} in grid cell ({},{})",
                            i + 1,
                            j + 1
                        )));
                    }
                    planes[k - 1][i][j] = sign;
                }
            }
        }
        Ashm::from_planes(planes)
    }

    pub fn parse_json(input: &str) -> Result<Ashm> {
        let file: AshmFile = serde_json::from_str(input)
            .map_err(|e| Error::parse(format!("bad hypermatrix document: {e}")))?;
        if file.planes.len() != file.n {
            return Err(Error::parse(format!(
                "declared order {} but found {} planes",
                file.n,
                file.planes.len()
            )));
        }
        Ashm::from_planes(file.planes)
    }

    pub fn to_json(&self) -> String {
        let n = self.n;
        let planes: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| (0..n).map(|j| self.get(i, j, k) as i64).collect())
                    .collect()
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&AshmFile { n, planes })
            .expect("json serialization");
        out.push('\n');
        out
    }
}

/// Non-zero entries must be present, alternate in sign, and start and end
/// with `+1`.
fn alternating_line(entries: impl Iterator<Item = i8>) -> bool {
    let nonzeros: Vec<i8> = entries.filter(|&e| e != 0).collect();
    if nonzeros.first() != Some(&1) || nonzeros.last() != Some(&1) {
        return false;
    }
    nonzeros.windows(2).all(|w| w[0] != w[1])
}

/// One cell of grid notation: signed integers concatenated, first sign
/// optional. Returns `(weight, sign)` pairs with 1-based weights.
fn parse_grid_cell(cell: &str, n: usize) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    let mut rest = cell;
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(Error::parse(format!("bad grid cell {cell:?}"))),
        };
        first = false;
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(Error::parse(format!("bad grid cell {cell:?}")));
        }
        rest = &rest[digits.len()..];
        let k: usize = digits
            .parse()
            .map_err(|_| Error::parse(format!("bad grid cell {cell:?}")))?;
        if k == 0 || k > n {
            return Err(Error::parse(format!(
                "weight {k} outside 1..={n} in grid cell {cell:?}"
            )));
        }
        out.push((k, sign));
    }
    if out.is_empty() {
        return Err(Error::parse("empty grid cell"));
    }
    Ok(out)
}

/// A square array of positive integers bounded by `n(n+1)/2` — the loose
/// structural envelope of weighted plane sums. Arrays produced by
/// [`Ashm::ashl`] additionally have every line majorized by the staircase
/// and outer lines that are permutations; arbitrary arrays passing this
/// constructor need not (see [`check_lines_majorized`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ashl(IntMatrix);

impl Ashl {
    pub fn new(m: IntMatrix) -> Result<Ashl> {
        let n = m.order();
        let bound = BigInt::from((n * (n + 1) / 2) as u64);
        let one = BigInt::from(1);
        for i in 0..n {
            for j in 0..n {
                let e = m.get(i, j);
                if *e < one || *e > bound {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: e.clone(),
                    });
                }
            }
        }
        Ok(Ashl(m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Occurrences of `value` in 0-based row `i`.
    pub fn count_in_row(&self, value: usize, i: usize) -> usize {
        let target = BigInt::from(value as u64);
        self.0.row(i).iter().filter(|e| **e == target).count()
    }

    /// Occurrences of `value` in 0-based column `j`.
    pub fn count_in_col(&self, value: usize, j: usize) -> usize {
        let target = BigInt::from(value as u64);
        self.0.col(j).iter().filter(|e| **e == target).count()
    }
}

/// True when every row and every column is majorized by `(n,...,2,1)`.
/// Necessary for an array to be a weighted plane sum, but not sufficient.
pub fn check_lines_majorized(l: &Ashl) -> bool {
    let n = l.order();
    let staircase = vectors::staircase(n);
    (0..n).all(|i| {
        gale_ryser::majorized_by(l.matrix().row(i), &staircase).expect("equal lengths")
    }) && (0..n).all(|j| {
        gale_ryser::majorized_by(&l.matrix().col(j), &staircase).expect("equal lengths")
    })
}

/// True when rows 1 and n and columns 1 and n are each permutations of
/// `1..=n`, as the outer lines of any weighted plane sum must be (the
/// outer lines of an alternating sign matrix hold a single `+1`).
pub fn check_outer_lines_permutation(l: &Ashl) -> bool {
    let n = l.order();
    let mut expected: Vec<BigInt> = (1..=n).map(|k| BigInt::from(k as u64)).collect();
    expected.sort();
    let is_perm = |mut line: Vec<BigInt>| {
        line.sort();
        line == expected
    };
    is_perm(l.matrix().row(0).to_vec())
        && is_perm(l.matrix().row(n - 1).to_vec())
        && is_perm(l.matrix().col(0))
        && is_perm(l.matrix().col(n - 1))
}

/// Every order-3 alternating sign hypermatrix, generated as ordered triples
/// of the seven order-3 ASMs filtered on vertical-line alternation, in the
/// lexicographic order of the triple indices.
pub fn enumerate_ashms_order3() -> Vec<Ashm> {
    let asms = crate::enumeration::enumerate_asms(3).expect("order 3 is within limits");
    let plane_of = |a: &Asm| -> Vec<Vec<i64>> {
        (0..3)
            .map(|i| (0..3).map(|j| a.entry(i, j) as i64).collect())
            .collect()
    };
    let planes: Vec<Vec<Vec<i64>>> = asms.iter().map(plane_of).collect();
    let mut out = Vec::new();
    for p1 in &planes {
        for p2 in &planes {
            for p3 in &planes {
                if let Ok(ashm) = Ashm::from_planes(vec![p1.clone(), p2.clone(), p3.clone()]) {
                    out.push(ashm);
                }
            }
        }
    }
    out
}

/// Per-line maxima of one value's occurrence counts across a family of
/// arrays. Exact bounds only when the family is exhaustive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceProfile {
    pub value: usize,
    /// Maximum occurrences of `value` in row `i` over the family, 0-based.
    pub row_max: Vec<usize>,
    pub col_max: Vec<usize>,
}

impl OccurrenceProfile {
    /// The larger of the row-i and column-i maxima, 0-based.
    pub fn line_max(&self, i: usize) -> usize {
        self.row_max[i].max(self.col_max[i])
    }
}

pub fn occurrence_profile(value: usize, ashls: &[Ashl]) -> OccurrenceProfile {
    let n = ashls.first().map_or(0, |l| l.order());
    let mut row_max = vec![0usize; n];
    let mut col_max = vec![0usize; n];
    for l in ashls {
        for i in 0..n {
            row_max[i] = row_max[i].max(l.count_in_row(value, i));
            col_max[i] = col_max[i].max(l.count_in_col(value, i));
        }
    }
    OccurrenceProfile {
        value,
        row_max,
        col_max,
    }
}
