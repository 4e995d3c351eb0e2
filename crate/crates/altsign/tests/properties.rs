//! Cross-module invariants: property tests over randomized inputs plus a
//! few exhaustive sweeps that pit independent brute-force oracles against
//! the production implementations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use altsign::asm::{Asm, PartialSumMatrix};
use altsign::bijection;
use altsign::enumeration;
use altsign::gale_ryser;
use altsign::matrix::IntMatrix;
use altsign::monotonize;
use altsign::triangle::{MonotoneTriangle, RowIncreasingTriangle};
use altsign::vectors::{self, IntVector};

fn big(values: &[i64]) -> IntVector {
    vectors::from_i64(values)
}

/// Strategy: a square matrix of small integers of order 1..=5.
fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
            .prop_map(|rows| IntMatrix::from_i64_rows(&rows).unwrap())
    })
}

/// Strategy: a row-increasing triangle of order 1..=6, one random
/// strictly-increasing subset per row.
fn random_row_increasing() -> impl Strategy<Value = RowIncreasingTriangle> {
    (1usize..=6).prop_flat_map(|n| {
        let rows: Vec<_> = (1..=n)
            .map(move |k| prop::sample::subsequence((1..=n).collect::<Vec<usize>>(), k))
            .collect();
        rows.prop_map(|rows| RowIncreasingTriangle::new(rows).unwrap())
    })
}

/// Strategy: a monotone triangle of order 1..=7, grown upward from the
/// forced bottom row by random interlacing choices.
fn random_monotone() -> impl Strategy<Value = MonotoneTriangle> {
    (1usize..=7, any::<u64>()).prop_map(|(n, seed)| {
        let mut state = seed;
        let mut next = move |bound: usize| {
            // xorshift; bound is always >= 1
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state as usize) % bound
        };
        let mut rows: Vec<Vec<usize>> = vec![(1..=n).collect()];
        while rows.last().unwrap().len() > 1 {
            let below = rows.last().unwrap().clone();
            let mut row = Vec::with_capacity(below.len() - 1);
            for j in 0..below.len() - 1 {
                let lo = below[j].max(row.last().map_or(0, |&v: &usize| v + 1));
                let hi = below[j + 1];
                row.push(lo + next(hi - lo + 1));
            }
            rows.push(row);
        }
        rows.reverse();
        MonotoneTriangle::new(rows).unwrap()
    })
}

proptest! {
    /// The weighted projection is linear over integer matrices.
    #[test]
    fn projection_is_linear(
        pair in (1usize..=5).prop_flat_map(|n| {
            let entries = prop::collection::vec(prop::collection::vec(-9i64..=9, n), n);
            (entries.clone(), entries)
        }),
        a in -5i64..=5,
        b in -5i64..=5,
    ) {
        let (x_rows, y_rows) = pair;
        let n = x_rows.len();
        let x = IntMatrix::from_i64_rows(&x_rows).unwrap();
        let y = IntMatrix::from_i64_rows(&y_rows).unwrap();
        let combo_rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| a * x_rows[i][j] + b * y_rows[i][j]).collect())
            .collect();
        let combo = IntMatrix::from_i64_rows(&combo_rows).unwrap();
        let expected: IntVector = x
            .weighted_projection()
            .iter()
            .zip(y.weighted_projection())
            .map(|(vx, vy)| BigInt::from(a) * vx + BigInt::from(b) * vy)
            .collect();
        prop_assert_eq!(combo.weighted_projection(), expected);
    }

    /// Conjugation is an involution on partitions fitting in an m-by-m box.
    #[test]
    fn conjugate_is_an_involution_on_partitions(
        mut parts in prop::collection::vec(0i64..=8, 1..=8),
    ) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let m = parts.len().max(parts[0] as usize).max(1);
        let mut padded = big(&parts);
        padded.resize(m, BigInt::from(0));
        let once = gale_ryser::conjugate(&padded, m).unwrap();
        let twice = gale_ryser::conjugate(&once, m).unwrap();
        prop_assert_eq!(twice, padded);
    }

    /// Majorization is reflexive always, and transitive on equal-sum
    /// vectors whenever the two hypotheses hold.
    #[test]
    fn majorization_reflexive_and_transitive(
        cuts in prop::collection::vec((0u32..=20, 0u32..=20), 2..=6),
    ) {
        // Three equal-sum vectors derived from shared totals.
        let n = cuts.len();
        let make = |f: &dyn Fn(usize, u32, u32) -> i64| -> IntVector {
            let mut v: Vec<i64> = cuts
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| f(i, a, b))
                .collect();
            let correction: i64 = 40 - v.iter().sum::<i64>() % 40;
            v[0] += correction;
            big(&v)
        };
        let x = make(&|_, a, b| (a + b) as i64);
        let y = make(&|_, a, _| 2 * a as i64);
        let z = make(&|i, _, b| if i % 2 == 0 { 2 * b as i64 } else { 0 });
        for v in [&x, &y, &z] {
            prop_assert!(gale_ryser::majorized_by(v, v).unwrap());
        }
        let _ = n;
        if gale_ryser::majorized_by(&x, &y).unwrap()
            && gale_ryser::majorized_by(&y, &z).unwrap()
        {
            prop_assert!(gale_ryser::majorized_by(&x, &z).unwrap());
        }
    }

    /// Text serialization round-trips.
    #[test]
    fn matrix_text_round_trip(m in small_matrix()) {
        prop_assert_eq!(IntMatrix::parse_text(&m.to_text()).unwrap(), m);
    }

    /// Monotonization preserves the entry multiset and lands on a
    /// validated monotone triangle within the potential bound.
    #[test]
    fn monotonize_preserves_multiset(t in random_row_increasing()) {
        let (monotone, trace) = monotonize::monotonize_traced(&t);
        prop_assert_eq!(monotone.entry_multiset(), t.entry_multiset());
        prop_assert!(trace.len() <= monotonize::potential_f(&t));
    }

    /// The ASM/monotone-triangle bijection round-trips on random monotone
    /// triangles, and the projection equals the entry multiset.
    #[test]
    fn bijection_round_trip_random(t in random_monotone()) {
        let a = bijection::asm_from_monotone(&t);
        prop_assert_eq!(&bijection::monotone_from_asm(&a), &t);
        prop_assert_eq!(a.weighted_projection(), t.entry_multiset());

        // The partial sum matrix is the triangle's 0/1 incidence matrix.
        let p = bijection::partial_sum(&a);
        prop_assert_eq!(
            p.matrix(),
            &bijection::matrix01_from_triangle(t.row_increasing())
        );
    }

    /// Grid notation round-trips on random order-3 hypermatrices.
    #[test]
    fn ashm_formats_round_trip(index in 0usize..14) {
        let all = altsign::ashm::enumerate_ashms_order3();
        let a = &all[index];
        prop_assert_eq!(&altsign::ashm::Ashm::parse_grid(&a.grid_notation()).unwrap(), a);
        prop_assert_eq!(&altsign::ashm::Ashm::parse_json(&a.to_json()).unwrap(), a);
    }
}

/// Brute force: does any (0,1)-matrix with row sums (1..n) and the given
/// column sums exist? Independent of the greedy construction.
fn exists_01_matrix(col_sums: &[usize]) -> bool {
    let n = col_sums.len();
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }
    fn rec(row: usize, n: usize, remaining: &mut Vec<i64>) -> bool {
        if row == n {
            return remaining.iter().all(|&r| r == 0);
        }
        for subset in subsets(n, row + 1) {
            if subset.iter().any(|&j| remaining[j] == 0) {
                continue;
            }
            for &j in &subset {
                remaining[j] -= 1;
            }
            if rec(row + 1, n, remaining) {
                for &j in &subset {
                    remaining[j] += 1;
                }
                return true;
            }
            for &j in &subset {
                remaining[j] += 1;
            }
        }
        false
    }
    let mut remaining: Vec<i64> = col_sums.iter().map(|&c| c as i64).collect();
    rec(0, n, &mut remaining)
}

/// The feasibility predicate, the greedy construction, and a brute-force
/// existence search agree on every candidate margin vector, n <= 4.
#[test]
fn gale_ryser_feasibility_cross_check() {
    for n in 1..=4usize {
        let staircase = vectors::staircase(n);
        let mut v = vec![0usize; n];
        loop {
            let as_big = big(&v.iter().map(|&x| x as i64).collect::<Vec<_>>());
            let feasible = gale_ryser::gale_ryser_feasible(&staircase, &as_big);
            let brute = exists_01_matrix(&v);
            assert_eq!(feasible, brute, "margin disagreement at {v:?}");
            if v.iter().all(|&x| x >= 1) {
                let constructed = gale_ryser::construct_01_matrix(&as_big);
                assert_eq!(constructed.is_ok(), feasible, "construct vs feasible at {v:?}");
                if let Ok(m) = constructed {
                    for i in 0..n {
                        let sum: BigInt = m.row(i).iter().sum();
                        assert_eq!(sum, BigInt::from((i + 1) as u64));
                    }
                    for (j, &vj) in v.iter().enumerate() {
                        let sum: BigInt = m.col(j).iter().sum();
                        assert_eq!(sum, BigInt::from(vj as u64));
                    }
                }
            }
            // Next vector in {0..n}^n.
            let mut idx = 0;
            loop {
                if idx == n {
                    break;
                }
                v[idx] += 1;
                if v[idx] <= n {
                    break;
                }
                v[idx] = 0;
                idx += 1;
            }
            if idx == n {
                break;
            }
        }
    }
}

/// Projections of all alternating sign matrices up to order 5: totals are
/// n(n+1)/2 and every entry is at least 1.
#[test]
fn projection_totals_and_positivity_exhaustive() {
    for n in 1..=5usize {
        let expected_total = BigInt::from((n * (n + 1) / 2) as u64);
        for a in enumeration::enumerate_asms(n).unwrap() {
            let v = a.weighted_projection();
            assert_eq!(vectors::sum(&v), expected_total);
            assert!(v.iter().all(|x| *x >= BigInt::from(1)));
        }
    }
}

/// A triangle passes monotone validation exactly when it passes
/// row-increasing validation with no inversions (exhaustive, n <= 4).
#[test]
fn monotone_iff_row_increasing_without_inversions() {
    for n in 1..=4usize {
        for t in enumeration::enumerate_row_increasing(n).unwrap() {
            let monotone_ok = MonotoneTriangle::new(t.rows().to_vec()).is_ok();
            let no_inversions = monotonize::find_inversions(&t).is_empty();
            assert_eq!(monotone_ok, no_inversions, "disagreement at {:?}", t.rows());
        }
    }
}

/// Construction feasibility matches the majorization predicate on fuzzed
/// vectors with assorted totals.
#[test]
fn construction_errors_exactly_off_the_permutohedron() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=6usize);
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=(n as i64 + 2))).collect();
        let vb = big(&v);
        let feasible = v.iter().all(|&x| x > 0)
            && gale_ryser::majorized_by(&vb, &vectors::staircase(n)).unwrap();
        let result = altsign::synthesis::asm_with_projection(&vb);
        assert_eq!(result.is_ok(), feasible, "disagreement at {v:?}");
        if let Ok(a) = result {
            assert_eq!(a.weighted_projection(), vb);
        }
    }
}

/// The 0/1-matrix conversions are mutually inverse on enumerated partial
/// sum matrices, and every partial-sum difference validates.
#[test]
fn partial_sum_round_trip_exhaustive() {
    for n in 1..=4usize {
        for a in enumeration::enumerate_asms(n).unwrap() {
            let p = bijection::partial_sum(&a);
            let t = bijection::triangle_from_01(p.matrix()).unwrap();
            assert_eq!(&bijection::matrix01_from_triangle(&t), p.matrix());
            assert_eq!(bijection::asm_from_partial_sum(&p).unwrap(), a);
            // Re-validating the 0/1 matrix as a partial sum matrix holds.
            PartialSumMatrix::new(p.matrix().clone()).unwrap();
        }
    }
}

/// Distinct alternating sign matrices have distinct monotone triangles
/// (injectivity on the full enumeration).
#[test]
fn bijection_is_injective_small_orders() {
    for n in 1..=4usize {
        let asms = enumeration::enumerate_asms(n).unwrap();
        let images: BTreeSet<Vec<Vec<usize>>> = asms
            .iter()
            .map(|a| bijection::monotone_from_asm(a).rows().to_vec())
            .collect();
        assert_eq!(images.len(), asms.len());
        let _ = Asm::new(asms[0].matrix().clone()).unwrap();
    }
}
