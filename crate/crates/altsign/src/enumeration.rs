//! Exhaustive small-order generators, used as brute-force oracles by the
//! rest of the crate's tests.
//!
//! The alternating-sign-matrix generator works directly on matrix entries
//! with column-state pruning and never touches the triangle bijection, so
//! the two can check each other. All generators are deterministic: a fixed
//! lexicographic order, identical on every run.
//!
//! Orders are capped (the defaults keep full test sweeps fast); the caps
//! are arguments, not constants, via the `*_with_limit` variants.

use num_bigint::BigInt;

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::triangle::{MonotoneTriangle, RowIncreasingTriangle};
use crate::vectors::IntVector;

/// Default cap for ASM and monotone-triangle enumeration.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 6;
/// Default cap where counts are products of binomials and explode faster.
pub const DEFAULT_PRODUCT_LIMIT: usize = 5;

fn check_order(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadShape {
            detail: "order must be at least 1".into(),
        });
    }
    if n > limit {
        return Err(Error::LimitExceeded { order: n, limit });
    }
    Ok(())
}

/// Every `n x n` alternating sign matrix, by backtracking over entries.
///
/// Entries are chosen in the order `-1 < 0 < 1`, cell by cell, row-major,
/// pruning with the running row and column prefix states (a prefix sum of
/// any ASM line is 0 or 1, and it forces the sign of the next non-zero).
pub fn enumerate_asms(n: usize) -> Result<Vec<Asm>> {
    enumerate_asms_with_limit(n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn enumerate_asms_with_limit(n: usize, limit: usize) -> Result<Vec<Asm>> {
    check_order(n, limit)?;
    let mut grid = vec![0i8; n * n];
    let mut col_state = vec![0i8; n];
    let mut out = Vec::new();
    fill_cell(n, 0, 0, 0, &mut grid, &mut col_state, &mut out);
    Ok(out)
}

fn fill_cell(
    n: usize,
    i: usize,
    j: usize,
    row_state: i8,
    grid: &mut Vec<i8>,
    col_state: &mut Vec<i8>,
    out: &mut Vec<Asm>,
) {
    if i == n {
        if col_state.iter().all(|&s| s == 1) {
            let m = IntMatrix::from_i64_rows(
                &(0..n)
                    .map(|r| (0..n).map(|c| grid[r * n + c] as i64).collect())
                    .collect::<Vec<_>>(),
            )
            .expect("grid is square");
            out.push(Asm::new(m).expect("backtracking output must validate"));
        }
        return;
    }
    let (next_i, next_j) = if j + 1 == n { (i + 1, 0) } else { (i, j + 1) };
    for entry in [-1i8, 0, 1] {
        let row_ok = match entry {
            1 => row_state == 0,
            -1 => row_state == 1,
            _ => true,
        };
        let col_ok = match entry {
            1 => col_state[j] == 0,
            -1 => col_state[j] == 1,
            _ => true,
        };
        if !row_ok || !col_ok {
            continue;
        }
        let new_row_state = row_state + entry;
        // Every completed row must sum to 1.
        if j + 1 == n && new_row_state != 1 {
            continue;
        }
        grid[i * n + j] = entry;
        col_state[j] += entry;
        let carried = if j + 1 == n { 0 } else { new_row_state };
        fill_cell(n, next_i, next_j, carried, grid, col_state, out);
        col_state[j] -= entry;
        grid[i * n + j] = 0;
    }
}

/// Every monotone triangle of order `n`, grown upward from the forced
/// bottom row `(1,...,n)` by interlacing extension.
pub fn enumerate_monotone(n: usize) -> Result<Vec<MonotoneTriangle>> {
    enumerate_monotone_with_limit(n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn enumerate_monotone_with_limit(n: usize, limit: usize) -> Result<Vec<MonotoneTriangle>> {
    check_order(n, limit)?;
    let bottom: Vec<usize> = (1..=n).collect();
    let mut stack = vec![bottom];
    let mut out = Vec::new();
    extend_upward(&mut stack, &mut out);
    Ok(out)
}

fn extend_upward(stack: &mut Vec<Vec<usize>>, out: &mut Vec<MonotoneTriangle>) {
    let below = stack.last().expect("stack starts non-empty");
    if below.len() == 1 {
        let mut rows: Vec<Vec<usize>> = stack.clone();
        rows.reverse();
        out.push(MonotoneTriangle::new(rows).expect("interlacing extension is monotone"));
        return;
    }
    let m = below.len() - 1;
    let below = below.clone();
    let mut row = vec![0usize; m];
    pick_entry(0, m, &below, &mut row, stack, out);
}

fn pick_entry(
    j: usize,
    m: usize,
    below: &[usize],
    row: &mut Vec<usize>,
    stack: &mut Vec<Vec<usize>>,
    out: &mut Vec<MonotoneTriangle>,
) {
    if j == m {
        stack.push(row.clone());
        extend_upward(stack, out);
        stack.pop();
        return;
    }
    let lo = below[j].max(if j == 0 { 0 } else { row[j - 1] + 1 });
    for v in lo..=below[j + 1] {
        row[j] = v;
        pick_entry(j + 1, m, below, row, stack, out);
    }
}

/// Every row-increasing triangle of order `n` with entries in `1..=n`:
/// the product, over rows, of all strictly increasing `i`-subsets.
pub fn enumerate_row_increasing(n: usize) -> Result<Vec<RowIncreasingTriangle>> {
    enumerate_row_increasing_with_limit(n, DEFAULT_PRODUCT_LIMIT)
}

pub fn enumerate_row_increasing_with_limit(
    n: usize,
    limit: usize,
) -> Result<Vec<RowIncreasingTriangle>> {
    check_order(n, limit)?;
    let row_choices: Vec<Vec<Vec<usize>>> = (1..=n).map(|k| subsets(n, k)).collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    fn rec(
        i: usize,
        n: usize,
        row_choices: &[Vec<Vec<usize>>],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<RowIncreasingTriangle>,
    ) {
        if i == n {
            out.push(
                RowIncreasingTriangle::new(rows.clone())
                    .expect("subset rows are strictly increasing"),
            );
            return;
        }
        for choice in &row_choices[i] {
            rows.push(choice.clone());
            rec(i + 1, n, row_choices, rows, out);
            rows.pop();
        }
    }
    rec(0, n, &row_choices, &mut rows, &mut out);
    Ok(out)
}

/// All strictly increasing `k`-subsets of `1..=n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Every positive integer vector of length `n` majorized by `(n,...,2,1)`,
/// generated as partitions of `n(n+1)/2` filtered by majorization, then
/// expanded into their distinct permutations.
pub fn enumerate_majorized_vectors(n: usize) -> Result<Vec<IntVector>> {
    enumerate_majorized_vectors_with_limit(n, DEFAULT_PRODUCT_LIMIT)
}

pub fn enumerate_majorized_vectors_with_limit(n: usize, limit: usize) -> Result<Vec<IntVector>> {
    check_order(n, limit)?;
    let total = n * (n + 1) / 2;
    let mut partitions = Vec::new();
    let mut parts = Vec::with_capacity(n);
    partitions_rec(total, n, n, &mut parts, &mut partitions);

    let staircase: Vec<usize> = (1..=n).rev().collect();
    let mut out = Vec::new();
    for p in partitions {
        if !majorized_usize(&p, &staircase) {
            continue;
        }
        for perm in distinct_permutations(&p) {
            out.push(perm.into_iter().map(|v| BigInt::from(v as u64)).collect());
        }
    }
    Ok(out)
}

/// Partitions of `total` into exactly `count` parts, each in `1..=max`,
/// weakly decreasing.
fn partitions_rec(
    total: usize,
    count: usize,
    max: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if count == 0 {
        if total == 0 {
            out.push(parts.clone());
        }
        return;
    }
    // Remaining parts are positive, so at least `count` must remain.
    let high = max.min(total.saturating_sub(count - 1));
    for v in (1..=high).rev() {
        parts.push(v);
        partitions_rec(total - v, count - 1, v, parts, out);
        parts.pop();
    }
}

fn majorized_usize(x: &[usize], y: &[usize]) -> bool {
    // Both inputs arrive sorted descending.
    let mut px = 0usize;
    let mut py = 0usize;
    for (a, b) in x.iter().zip(y.iter()) {
        px += a;
        py += b;
        if px > py {
            return false;
        }
    }
    px == py
}

/// All distinct permutations of a multiset, lexicographic.
fn distinct_permutations(values: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    while next_permutation(&mut sorted) {
        out.push(sorted.clone());
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection;
    use crate::vectors::from_i64;
    use std::collections::BTreeSet;

    #[test]
    fn asm_counts_small_orders() {
        // Frozen after the two independent enumerators (entry backtracking
        // here, interlacing extension below) agreed on them.
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_asms(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
    }

    #[test]
    fn order_two_is_the_permutations() {
        let asms = enumerate_asms(2).unwrap();
        assert_eq!(asms.len(), 2);
        let id = IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let swap = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let set: BTreeSet<_> = asms.iter().map(|a| a.matrix().clone()).collect();
        assert!(set.contains(&id) && set.contains(&swap));
    }

    #[test]
    fn order_three_has_six_permutations_plus_diamond() {
        let asms = enumerate_asms(3).unwrap();
        assert_eq!(asms.len(), 7);
        let diamond =
            IntMatrix::from_i64_rows(&[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(
            asms.iter().filter(|a| a.matrix() == &diamond).count(),
            1
        );
        // The other six have no -1 at all: permutation matrices.
        let perms = asms
            .iter()
            .filter(|a| {
                (0..3).all(|i| (0..3).all(|j| a.entry(i, j) >= 0))
            })
            .count();
        assert_eq!(perms, 6);
    }

    #[test]
    fn monotone_counts_match_asm_counts() {
        for n in 1..=5 {
            let monotone = enumerate_monotone(n).unwrap();
            let asms = enumerate_asms(n).unwrap();
            assert_eq!(monotone.len(), asms.len(), "order {n}");
            // The bijection maps one enumeration onto the other.
            let from_asms: BTreeSet<Vec<Vec<usize>>> = asms
                .iter()
                .map(|a| bijection::monotone_from_asm(a).rows().to_vec())
                .collect();
            let direct: BTreeSet<Vec<Vec<usize>>> =
                monotone.iter().map(|t| t.rows().to_vec()).collect();
            assert_eq!(from_asms, direct, "order {n}");
        }
    }

    #[test]
    fn monotone_order_one() {
        let ts = enumerate_monotone(1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1]]);
    }

    #[test]
    fn row_increasing_counts_are_binomial_products() {
        // C(n,1) * C(n,2) * ... * C(n,n)
        assert_eq!(enumerate_row_increasing(1).unwrap().len(), 1);
        assert_eq!(enumerate_row_increasing(2).unwrap().len(), 2);
        assert_eq!(enumerate_row_increasing(3).unwrap().len(), 9);
        assert_eq!(enumerate_row_increasing(4).unwrap().len(), 96);
        assert_eq!(enumerate_row_increasing(5).unwrap().len(), 2500);
    }

    #[test]
    fn majorized_vectors_small_orders() {
        let v1 = enumerate_majorized_vectors(1).unwrap();
        assert_eq!(v1, vec![from_i64(&[1])]);

        let v2 = enumerate_majorized_vectors(2).unwrap();
        let set2: BTreeSet<_> = v2.into_iter().collect();
        assert_eq!(
            set2,
            BTreeSet::from([from_i64(&[2, 1]), from_i64(&[1, 2])])
        );

        let v3 = enumerate_majorized_vectors(3).unwrap();
        assert_eq!(v3.len(), 7);
        let set3: BTreeSet<_> = v3.into_iter().collect();
        assert!(set3.contains(&from_i64(&[2, 2, 2])));
        assert!(set3.contains(&from_i64(&[3, 2, 1])));
        assert!(set3.contains(&from_i64(&[1, 2, 3])));
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            enumerate_asms(7),
            Err(Error::LimitExceeded { order: 7, limit: 6 })
        ));
        assert!(matches!(
            enumerate_row_increasing(6),
            Err(Error::LimitExceeded { order: 6, limit: 5 })
        ));
        assert!(enumerate_asms_with_limit(2, 2).is_ok());
        assert!(matches!(enumerate_asms(0), Err(Error::BadShape { .. })));
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(
            enumerate_asms(4).unwrap(),
            enumerate_asms(4).unwrap()
        );
        let a = enumerate_majorized_vectors(4).unwrap();
        let b = enumerate_majorized_vectors(4).unwrap();
        assert_eq!(a, b);
    }
}
