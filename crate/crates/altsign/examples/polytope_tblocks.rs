//! Exact-rational polytope membership and the two T-block decompositions:
//! any member reached from any other by scalar multiples of T-blocks, and
//! by opposite-depth pairs exactly when the weighted projections agree.
//!
//! ```sh
//! cargo run --example polytope_tblocks
//! ```

use altsign::asm::Asm;
use altsign::matrix::IntMatrix;
use altsign::polytope::{self, PolytopeMatrix, RationalMatrix};

fn main() {
    let diamond = Asm::new(
        IntMatrix::from_i64_rows(&[vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap(),
    )
    .unwrap();
    let a = PolytopeMatrix::from_asm(&diamond);

    let uniform = PolytopeMatrix::new(
        RationalMatrix::parse_json(
            r#"{"n": 3, "rows": [["1/3","1/3","1/3"],["1/3","1/3","1/3"],["1/3","1/3","1/3"]]}"#,
        )
        .unwrap(),
    )
    .unwrap();

    println!("decomposing the uniform matrix against the diamond:");
    let terms = polytope::decompose_tblocks(&a, &uniform).unwrap();
    print!("{}", polytope::format_terms(&terms));
    assert_eq!(polytope::apply_terms(&a, &terms).unwrap(), *uniform.matrix());
    println!("reconstruction is exact\n");

    let sixteenth = PolytopeMatrix::new(
        RationalMatrix::parse_json(
            r#"{"n": 3, "rows": [["1/16","3/4","3/16"],["7/8","-1/2","5/8"],["1/16","3/4","3/16"]]}"#,
        )
        .unwrap(),
    )
    .unwrap();

    println!("equal projections, so opposite-depth pairs suffice:");
    let paired = polytope::decompose_paired(&a, &sixteenth).unwrap();
    print!("{}", polytope::format_terms(&paired));
    for term in &paired {
        let pair = term.pair.as_ref().unwrap();
        println!(
            "  depths {} and {} cancel in the projection",
            term.block.depth(),
            pair.depth()
        );
    }
    assert_eq!(
        polytope::apply_terms(&a, &paired).unwrap(),
        *sixteenth.matrix()
    );

    let identity = Asm::new(
        IntMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap(),
    )
    .unwrap();
    println!(
        "\npaired decomposition against the identity (projection 3,2,1 vs 2,2,2): {}",
        polytope::decompose_paired(&a, &PolytopeMatrix::from_asm(&identity)).unwrap_err()
    );
}
