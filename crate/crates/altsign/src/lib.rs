//! Exact-arithmetic toolkit for alternating sign matrices (ASMs) and their
//! relatives.
//!
//! The centrepiece is constructive: given any positive integer vector
//! majorized by `(n,...,2,1)`, [`synthesis::asm_with_projection`] builds an
//! `n x n` alternating sign matrix whose weighted projection (column sums
//! weighted by `n+1-i` per row `i`) is exactly that vector — and such a
//! vector is achievable *only* under that majorization, which
//! [`synthesis::verify_projection_theorem`] checks exhaustively at small
//! orders. The pipeline runs margin construction
//! ([`gale_ryser::construct_01_matrix`]), triangle read-off
//! ([`bijection::triangle_from_01`]), inverted-trapezoid switching
//! ([`monotonize`]), and the monotone-triangle/ASM bijection
//! ([`bijection::asm_from_monotone`]).
//!
//! Around it sit:
//!
//! - [`polytope`] — exact-rational membership of the ASM polytope and two
//!   T-block decomposition algorithms: any two members differ by scalar
//!   multiples of T-blocks, and equal weighted projections are exactly the
//!   reach of opposite-depth T-block pairs.
//! - [`ashm`] — alternating sign hypermatrices, their Latin-like weighted
//!   plane sums, grid notation, and an exhaustive order-3 search.
//! - [`enumeration`] — brute-force generators for small orders, used as
//!   oracles throughout the test suite.
//!
//! Everything is exact: integers are arbitrary precision, polytope entries
//! are arbitrary-precision rationals, and no floating point appears
//! anywhere. All values are immutable after validation and every operation
//! is a pure function, so everything is safe to share across threads.
//!
//! Conventions, used verbatim by every module: matrix and triangle
//! positions are 1-based in file formats and error messages, 0-based in
//! accessors; triangle steps are north-east `(i,j) -> (i-1,j)` and
//! south-east `(i,j) -> (i+1,j+1)`.
//!
//! The `examples/` directory carries one runnable walkthrough per
//! capability; `src/main.rs` exposes the same operations as the `altsign`
//! command-line tool.

pub mod ashm;
pub mod asm;
pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod gale_ryser;
pub mod matrix;
pub mod monotonize;
pub mod polytope;
pub mod synthesis;
pub mod triangle;
pub mod vectors;

pub use crate::asm::{Asm, PartialSumMatrix};
pub use crate::error::{Error, Result};
pub use crate::matrix::IntMatrix;
pub use crate::triangle::{MonotoneTriangle, RowIncreasingTriangle};
pub use crate::vectors::IntVector;
