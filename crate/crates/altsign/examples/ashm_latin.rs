//! Alternating sign hypermatrices and their Latin-like weighted plane
//! sums: validation, grid notation, the necessary line conditions, and
//! the exhaustive order-3 search.
//!
//! ```sh
//! cargo run --example ashm_latin
//! ```

use altsign::ashm::{self, Ashl, Ashm};
use altsign::matrix::IntMatrix;

fn main() {
    let a = Ashm::from_planes(vec![
        vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
        vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    ])
    .unwrap();

    println!("grid notation (each cell lists its vertical line's signed weights):");
    print!("{}", a.grid_notation());

    let l = a.ashl();
    println!("\nweighted plane sum:");
    print!("{}", l.matrix().to_text());
    println!(
        "lines majorized by the staircase: {}",
        ashm::check_lines_majorized(&l)
    );
    println!(
        "outer lines are permutations: {}",
        ashm::check_outer_lines_permutation(&l)
    );

    // Majorization everywhere is necessary but not sufficient.
    let near_miss = Ashl::new(
        IntMatrix::from_i64_rows(&[vec![2, 2, 2], vec![3, 2, 1], vec![1, 2, 3]]).unwrap(),
    )
    .unwrap();
    println!(
        "\nnear-miss array: majorized {} / outer lines {}",
        ashm::check_lines_majorized(&near_miss),
        ashm::check_outer_lines_permutation(&near_miss)
    );

    let all = ashm::enumerate_ashms_order3();
    println!("\nall order-3 hypermatrices: {}", all.len());
    let ashls: Vec<Ashl> = all.iter().map(|h| h.ashl()).collect();
    let profile = ashm::occurrence_profile(2, &ashls);
    for i in 0..3 {
        println!(
            "  value 2, line {}: row max {}, column max {}",
            i + 1,
            profile.row_max[i],
            profile.col_max[i]
        );
    }
}
