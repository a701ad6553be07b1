//! Infinite products expanded to a truncation order.
//!
//! Only factors with n <= N are multiplied: a factor (1 - q^n)^{-1} with
//! n > N is congruent to 1 modulo q^{N+1} and contributes nothing below
//! the truncation.

use crate::error::{check_k_i, Result};
use crate::series::TruncatedSeries;

/// The partition generating function 1 / ((1-q)(1-q^2)...) to precision N.
pub fn euler_product(precision: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(precision);
    for n in 1..=precision {
        acc = acc.mul_geometric_inverse(n);
    }
    acc
}

/// Is the part size n admitted by the product with modulus 2k+1 and label i,
/// i.e. n not congruent to 0 or +-(k+1-i) mod 2k+1?
pub fn residue_allowed(k: usize, i: usize, n: usize) -> bool {
    let modulus = 2 * k + 1;
    let r = n % modulus;
    r != 0 && r != k + 1 - i && r != k + i
}

/// The restricted product over admitted part sizes,
/// prod 1/(1-q^n) for n not congruent to 0, +-(k+1-i) mod 2k+1.
pub fn restricted_euler_product(k: usize, i: usize, precision: usize) -> Result<TruncatedSeries> {
    check_k_i(k, i)?;
    let mut acc = TruncatedSeries::one(precision);
    for n in 1..=precision {
        if residue_allowed(k, i, n) {
            acc = acc.mul_geometric_inverse(n);
        }
    }
    Ok(acc)
}

/// The complementary finite product prod (1 - q^n) over the *excluded*
/// residues n congruent to 0, +-(k+1-i) mod 2k+1, n <= N. By the triple
/// product identity this equals the theta numerator of the same (k, i);
/// it is expanded here by brute-force multiplication so the two sides
/// stay independent.
pub fn excluded_binomial_product(k: usize, i: usize, precision: usize) -> Result<TruncatedSeries> {
    check_k_i(k, i)?;
    let mut acc = TruncatedSeries::one(precision);
    for n in 1..=precision {
        if !residue_allowed(k, i, n) {
            acc = acc.mul_one_minus(n);
        }
    }
    Ok(acc)
}
