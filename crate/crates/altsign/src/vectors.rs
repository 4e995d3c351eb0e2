//! Integer vectors: projections, margins, conjugates.
//!
//! On the command line, vectors are comma-separated integers such as
//! `4,3,1,4,7,5,4`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type IntVector = Vec<BigInt>;

pub fn from_i64(values: &[i64]) -> IntVector {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// The vector `(n, n-1, ..., 2, 1)` that majorizes every achievable
/// weighted projection of order `n`.
pub fn staircase(n: usize) -> IntVector {
    (1..=n).rev().map(|k| BigInt::from(k as u64)).collect()
}

pub fn sum(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc + x)
}

pub fn parse_csv(input: &str) -> Result<IntVector> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::parse("empty vector"));
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad vector entry {tok:?}")))
        })
        .collect()
}

pub fn to_csv(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
