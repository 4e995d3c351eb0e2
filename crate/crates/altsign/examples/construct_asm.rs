//! Build an alternating sign matrix with a prescribed weighted projection.
//!
//! ```sh
//! cargo run --example construct_asm
//! ```

use altsign::synthesis;
use altsign::vectors;

fn main() {
    // Any positive integer vector majorized by (n,...,2,1) works; this is
    // the classic worked target of order 7.
    let v = vectors::from_i64(&[4, 3, 1, 4, 7, 5, 4]);
    println!("target projection: {}", vectors::to_csv(&v));

    let (asm, trace) = synthesis::asm_with_projection_traced(&v).unwrap();

    println!("\n(0,1)-matrix with row sums (1..7) and the target column sums:");
    print!("{}", trace.matrix01.to_text());

    println!("\nrow-increasing triangle read off the ones:");
    print!("{}", trace.initial.to_text());

    for step in &trace.switches {
        println!(
            "\nswitch rows {}-{} (height {}), potential now {}:",
            step.top_row + 1,
            step.bottom_row + 1,
            step.height,
            step.potential_after
        );
        print!("{}", step.result.to_text());
    }

    println!("\nmonotone triangle reached:");
    print!("{}", trace.monotone.to_text());

    println!("\nalternating sign matrix with that projection:");
    print!("{}", asm.matrix().to_text());
    assert_eq!(asm.weighted_projection(), v);
    println!("\nprojection verified: {}", vectors::to_csv(&asm.weighted_projection()));

    // Asking for something outside the permutohedron fails cleanly.
    let bad = vectors::from_i64(&[4, 1, 1]);
    println!(
        "\nrequesting {} fails: {}",
        vectors::to_csv(&bad),
        synthesis::asm_with_projection(&bad).unwrap_err()
    );
}
