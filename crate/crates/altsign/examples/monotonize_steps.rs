//! Inversions, inverted trapezoids, and the switching loop that turns a
//! row-increasing triangle into a monotone one without changing how often
//! each value occurs.
//!
//! ```sh
//! cargo run --example monotonize_steps
//! ```

use altsign::monotonize::{self, InversionDirection};
use altsign::triangle::RowIncreasingTriangle;
use altsign::vectors;

fn main() {
    let t = RowIncreasingTriangle::new(vec![
        vec![3],
        vec![1, 2],
        vec![2, 3, 4],
        vec![1, 2, 3, 4],
    ])
    .unwrap();
    println!("row-increasing triangle:");
    print!("{}", t.to_text());

    println!("\ninversions (larger value first):");
    for inv in monotonize::find_inversions(&t) {
        let dir = match inv.direction {
            InversionDirection::Upward => "upward",
            InversionDirection::Downward => "downward",
        };
        println!(
            "  ({}, {}) {} at row {}, column {}",
            inv.greater,
            inv.lesser,
            dir,
            inv.row + 1,
            inv.col + 1
        );
    }

    println!("\nmaximal inverted trapezoids:");
    for z in monotonize::find_inverted_trapezoids(&t) {
        println!(
            "  rows {}-{}, apex columns {}..={}, height {}, {} inversion(s)",
            z.top_row + 1,
            z.bottom_row + 1,
            z.col_start + 1,
            z.col_end + 1,
            z.height,
            z.inversions.len()
        );
    }

    println!("\npotential before: {}", monotonize::potential_f(&t));
    let (monotone, trace) = monotonize::monotonize_traced(&t);
    for (idx, step) in trace.iter().enumerate() {
        println!(
            "\nswitch {}: rows {}-{} (height {}), potential {}:",
            idx + 1,
            step.top_row + 1,
            step.bottom_row + 1,
            step.height,
            step.potential_after
        );
        print!("{}", step.result.to_text());
    }

    println!("\nmonotone result with the same entry multiset ({}):",
        vectors::to_csv(&monotone.entry_multiset()));
    print!("{}", monotone.to_text());
    assert_eq!(monotone.entry_multiset(), t.entry_multiset());
}
