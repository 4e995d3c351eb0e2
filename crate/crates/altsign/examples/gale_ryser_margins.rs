//! Majorization, conjugates, and the greedy fill that realises prescribed
//! margins as a (0,1)-matrix.
//!
//! ```sh
//! cargo run --example gale_ryser_margins
//! ```

use altsign::gale_ryser;
use altsign::vectors;
use num_bigint::BigInt;

fn main() {
    let v = vectors::from_i64(&[4, 3, 1, 4, 7, 5, 4]);
    let staircase = vectors::staircase(7);

    println!(
        "conjugate of the staircase is itself: {}",
        vectors::to_csv(&gale_ryser::conjugate(&staircase, 7).unwrap())
    );
    println!(
        "{} majorized by {}: {}",
        vectors::to_csv(&v),
        vectors::to_csv(&staircase),
        gale_ryser::majorized_by(&v, &staircase).unwrap()
    );
    println!(
        "margins (1..7) x ({}) feasible: {}",
        vectors::to_csv(&v),
        gale_ryser::gale_ryser_feasible(&staircase, &v)
    );

    let m = gale_ryser::construct_01_matrix(&v).unwrap();
    println!("\ngreedy witness with those margins:");
    print!("{}", m.to_text());

    let col_sums: Vec<BigInt> = (0..7).map(|j| vectors::sum(&m.col(j))).collect();
    println!("column sums recovered: {}", vectors::to_csv(&col_sums));

    let infeasible = vectors::from_i64(&[4, 1, 1]);
    println!(
        "\nasking for column sums {}: {}",
        vectors::to_csv(&infeasible),
        gale_ryser::construct_01_matrix(&infeasible).unwrap_err()
    );
}
