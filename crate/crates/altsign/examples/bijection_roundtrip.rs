//! Walk the ASM <-> partial sum matrix <-> monotone triangle
//! correspondence in both directions.
//!
//! ```sh
//! cargo run --example bijection_roundtrip
//! ```

use altsign::asm::Asm;
use altsign::bijection;
use altsign::matrix::IntMatrix;
use altsign::vectors;

fn main() {
    let a = Asm::new(
        IntMatrix::from_i64_rows(&[
            vec![0, 1, 0, 0],
            vec![1, -1, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap(),
    )
    .unwrap();
    println!("alternating sign matrix:");
    print!("{}", a.matrix().to_text());

    let p = bijection::partial_sum(&a);
    println!("\ncolumn prefix sums (a 0/1 matrix with row sums 1..n):");
    print!("{}", p.matrix().to_text());

    let t = bijection::monotone_from_asm(&a);
    println!("\nmonotone triangle (positions of the ones per row):");
    print!("{}", t.to_text());

    println!(
        "\nweighted projection {} equals the entry multiset {}",
        vectors::to_csv(&a.weighted_projection()),
        vectors::to_csv(&t.entry_multiset()),
    );
    assert_eq!(a.weighted_projection(), t.entry_multiset());

    let back = bijection::asm_from_monotone(&t);
    assert_eq!(back, a);
    println!("round trip through the triangle returns the same matrix");

    // Differencing an arbitrary 0/1 matrix with row sums (1..n) need not
    // produce an ASM; the failure is reported, not hidden.
    let q = altsign::asm::PartialSumMatrix::new(
        IntMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 1], vec![1, 1, 1]]).unwrap(),
    )
    .unwrap();
    println!(
        "\na partial-sum shaped matrix that differencing rejects: {}",
        bijection::asm_from_partial_sum(&q).unwrap_err()
    );
}
