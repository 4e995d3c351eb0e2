//! Inversions, inverted trapezoids, the switching operation, and the loop
//! that turns a row-increasing triangle into a monotone triangle with the
//! same entry multiset.
//!
//! Steps use the crate-wide convention: north-east `(i,j) -> (i-1,j)`,
//! south-east `(i,j) -> (i+1,j+1)`. An inversion is a pair `(b,a)` with
//! `b > a` and `a` one step north-east or south-east of `b`; it is
//! recorded at the position of `b`.

use crate::error::{Error, Result};
use crate::triangle::{MonotoneTriangle, RowIncreasingTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionDirection {
    /// The smaller value sits one step north-east, at `(i-1, j)`.
    Upward,
    /// The smaller value sits one step south-east, at `(i+1, j+1)`.
    Downward,
}

/// A single inversion, located at the larger value `b` (0-based `(row, col)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inversion {
    pub row: usize,
    pub col: usize,
    pub direction: InversionDirection,
    /// The pair of values `(b, a)` with `b > a`.
    pub greater: usize,
    pub lesser: usize,
}

impl Inversion {
    /// Position of the smaller value `a` (0-based).
    pub fn partner(&self) -> (usize, usize) {
        match self.direction {
            InversionDirection::Upward => (self.row - 1, self.col),
            InversionDirection::Downward => (self.row + 1, self.col + 1),
        }
    }
}

/// A maximal union of overlapping inverted order-2 sub-triangles sitting on
/// one pair of adjacent rows. `col_start..=col_end` are the apex positions
/// (0-based columns in `top_row`) of the constituent sub-triangles; the
/// trapezoid owns the top-row entries at those columns plus the bottom-row
/// entries at `col_start..=col_end+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertedTrapezoid {
    pub top_row: usize,
    pub bottom_row: usize,
    pub col_start: usize,
    pub col_end: usize,
    /// Rows of the triangle strictly below `bottom_row`.
    pub height: usize,
    pub inversions: Vec<Inversion>,
}

/// All inversions of a triangle, scanned row-major with the upward check
/// before the downward check at each position. Each inversion appears once,
/// at its larger member.
pub fn find_inversions(t: &RowIncreasingTriangle) -> Vec<Inversion> {
    let rows = t.rows();
    let n = rows.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..=i {
            let b = rows[i][j];
            if i >= 1 && j < i && rows[i - 1][j] < b {
                out.push(Inversion {
                    row: i,
                    col: j,
                    direction: InversionDirection::Upward,
                    greater: b,
                    lesser: rows[i - 1][j],
                });
            }
            if i + 1 < n && rows[i + 1][j + 1] < b {
                out.push(Inversion {
                    row: i,
                    col: j,
                    direction: InversionDirection::Downward,
                    greater: b,
                    lesser: rows[i + 1][j + 1],
                });
            }
        }
    }
    out
}

/// The potential `f`: the number of ordered position pairs `(p, q)` where
/// `q` is reachable from `p` by a non-empty sequence of north-east and
/// south-east steps and holds a strictly smaller entry.
///
/// Zero exactly on monotone triangles. Every trapezoid switch strictly
/// decreases it — the swapped pair itself stops counting, and any pair the
/// moved-down larger value gains was already counted from its old position
/// — which is what bounds the switching loop. (Counting only the *entries*
/// that occur before something smaller does not decrease strictly: a
/// switch can slide the larger value down past its partner onto a fresh
/// smaller neighbour, leaving that count unchanged.)
///
/// Computed by a bitset reachability sweep, columns right to left and rows
/// top to bottom within a column, so each position's reachable set is
/// complete when read. Well defined for any triangular array;
/// [`potential_f`] restricts it to validated triangles.
pub fn potential_f_raw(rows: &[Vec<usize>]) -> usize {
    let n = rows.len();
    debug_assert!(rows.iter().enumerate().all(|(i, r)| r.len() == i + 1));
    let total = n * (n + 1) / 2;
    let idx = |i: usize, j: usize| i * (i + 1) / 2 + j;
    let words = total.div_ceil(64);
    let mut value = vec![0usize; total];
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            value[idx(i, j)] = v;
        }
    }
    let mut reach = vec![vec![0u64; words]; total];
    for j in (0..n).rev() {
        for i in j..n {
            let p = idx(i, j);
            let mut acc = vec![0u64; words];
            // North-east (i-1, j) while row i-1 still has column j, and
            // south-east (i+1, j+1); both targets are already swept.
            let mut absorb = |q: usize, reach: &[Vec<u64>]| {
                acc[q / 64] |= 1u64 << (q % 64);
                for (slot, word) in acc.iter_mut().zip(reach[q].iter()) {
                    *slot |= word;
                }
            };
            if i >= 1 && j < i {
                absorb(idx(i - 1, j), &reach);
            }
            if i + 1 < n {
                absorb(idx(i + 1, j + 1), &reach);
            }
            reach[p] = acc;
        }
    }
    let mut count = 0;
    for p in 0..total {
        for q in 0..total {
            if reach[p][q / 64] >> (q % 64) & 1 == 1 && value[q] < value[p] {
                count += 1;
            }
        }
    }
    count
}

pub fn potential_f(t: &RowIncreasingTriangle) -> usize {
    potential_f_raw(t.rows())
}

/// All maximal inverted trapezoids, scanned by row pair from the top and
/// left to right within a pair — so the first element is the selection the
/// monotonization loop switches next.
pub fn find_inverted_trapezoids(t: &RowIncreasingTriangle) -> Vec<InvertedTrapezoid> {
    let rows = t.rows();
    let n = rows.len();
    let mut out = Vec::new();
    for top in 0..n.saturating_sub(1) {
        let bottom = top + 1;
        // inverted[c]: the unique inversion of the order-2 sub-triangle with
        // apex (top, c), if any.
        let inverted: Vec<Option<Inversion>> = (0..=top)
            .map(|c| sub_triangle_inversion(rows, top, c))
            .collect();
        let mut c = 0;
        while c <= top {
            if inverted[c].is_none() {
                c += 1;
                continue;
            }
            let start = c;
            while c <= top && inverted[c].is_some() {
                c += 1;
            }
            let inversions: Vec<Inversion> =
                inverted[start..c].iter().map(|o| o.unwrap()).collect();
            let z = InvertedTrapezoid {
                top_row: top,
                bottom_row: bottom,
                col_start: start,
                col_end: c - 1,
                height: n - 1 - bottom,
                inversions,
            };
            assert_entries_in_one_inversion(&z);
            out.push(z);
        }
    }
    out
}

/// The inversion of the order-2 sub-triangle with apex `(top, c)` and base
/// `(top+1, c)`, `(top+1, c+1)`. Row-increasingness makes the two kinds
/// mutually exclusive, so each inverted sub-triangle holds exactly one.
fn sub_triangle_inversion(rows: &[Vec<usize>], top: usize, c: usize) -> Option<Inversion> {
    let apex = rows[top][c];
    let left = rows[top + 1][c];
    let right = rows[top + 1][c + 1];
    let upward = left > apex;
    let downward = apex > right;
    assert!(
        !(upward && downward),
        "an order-2 sub-triangle of a row-increasing triangle holds at most one inversion"
    );
    if upward {
        Some(Inversion {
            row: top + 1,
            col: c,
            direction: InversionDirection::Upward,
            greater: left,
            lesser: apex,
        })
    } else if downward {
        Some(Inversion {
            row: top,
            col: c,
            direction: InversionDirection::Downward,
            greater: apex,
            lesser: right,
        })
    } else {
        None
    }
}

fn assert_entries_in_one_inversion(z: &InvertedTrapezoid) {
    let mut seen = std::collections::HashSet::new();
    for inv in &z.inversions {
        for pos in [(inv.row, inv.col), inv.partner()] {
            assert!(
                seen.insert(pos),
                "entry {pos:?} participates in two inversions of one trapezoid"
            );
        }
    }
}

/// Swaps the value pair of every inversion in the trapezoid simultaneously.
///
/// The trapezoid must have been computed from exactly this triangle;
/// anything else is reported as [`Error::StaleTrapezoid`]. Switching a
/// maximal trapezoid keeps the triangle row-increasing and strictly
/// decreases the potential; both facts are asserted rather than trusted.
pub fn switch_trapezoid(
    t: &RowIncreasingTriangle,
    z: &InvertedTrapezoid,
) -> Result<RowIncreasingTriangle> {
    if !find_inverted_trapezoids(t).iter().any(|w| w == z) {
        return Err(Error::StaleTrapezoid);
    }
    let before = potential_f(t);
    let mut rows = t.rows().to_vec();
    for inv in &z.inversions {
        let (pr, pc) = inv.partner();
        let b = rows[inv.row][inv.col];
        let a = rows[pr][pc];
        rows[inv.row][inv.col] = a;
        rows[pr][pc] = b;
    }
    let switched = RowIncreasingTriangle::new(rows)
        .expect("switching a maximal inverted trapezoid preserves row-increasingness");
    debug_assert!(
        potential_f(&switched) < before,
        "switching must strictly decrease the potential"
    );
    Ok(switched)
}

/// One recorded switch of the monotonization loop.
#[derive(Clone, Debug)]
pub struct SwitchRecord {
    /// 0-based rows of the switched trapezoid.
    pub top_row: usize,
    pub bottom_row: usize,
    pub height: usize,
    /// Potential of the triangle after this switch.
    pub potential_after: usize,
    pub result: RowIncreasingTriangle,
}

/// Repeatedly switches inverted trapezoids until no inversion remains,
/// yielding a monotone triangle with the same entry multiset.
///
/// The trapezoid switched at each step is the one whose bottom row is
/// topmost, ties broken by the leftmost column; any order terminates, but
/// a fixed one keeps runs and traces reproducible. Termination is bounded
/// by the starting potential since every switch decreases it.
pub fn monotonize(t: &RowIncreasingTriangle) -> MonotoneTriangle {
    monotonize_traced(t).0
}

pub fn monotonize_traced(t: &RowIncreasingTriangle) -> (MonotoneTriangle, Vec<SwitchRecord>) {
    let mut current = t.clone();
    let mut trace = Vec::new();
    loop {
        let trapezoids = find_inverted_trapezoids(&current);
        let Some(z) = trapezoids.first() else {
            break;
        };
        let next = switch_trapezoid(&current, z)
            .expect("freshly computed trapezoids cannot be stale");
        trace.push(SwitchRecord {
            top_row: z.top_row,
            bottom_row: z.bottom_row,
            height: z.height,
            potential_after: potential_f(&next),
            result: next.clone(),
        });
        current = next;
    }
    let monotone = MonotoneTriangle::new(current.rows().to_vec())
        .expect("a triangle without inversions is monotone");
    debug_assert_eq!(monotone.entry_multiset(), t.entry_multiset());
    (monotone, trace)
}
