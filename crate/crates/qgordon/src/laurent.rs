//! Exact Laurent polynomials: finitely many terms, exponents allowed to be
//! negative. These hold matrix entries (the step matrices and their
//! inverses, and the accumulated h-matrices), which are exact polynomial
//! facts independent of any series truncation.
//!
//! Values are kept in canonical trimmed form -- first and last stored
//! coefficients nonzero, the zero polynomial stored as an empty list -- so
//! structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::check::Mismatch;
use crate::error::{Error, Result};
use crate::series::{push_term, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    /// Exponent of `coeffs[0]`; 0 for the zero polynomial.
    offset: i64,
    /// Canonical: empty, or first and last entries nonzero.
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The monomial `c * q^exponent`.
    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            offset: exponent,
            coeffs: vec![c],
        }
    }

    pub fn monomial_i64(c: i64, exponent: i64) -> Self {
        Self::monomial(BigInt::from(c), exponent)
    }

    /// Builds from a dense coefficient run starting at `offset`, trimming
    /// to canonical form.
    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { offset, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let last = self.coeffs.iter().rposition(|c| !c.is_zero());
        match last {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(hi) => {
                self.coeffs.truncate(hi + 1);
                let lo = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
                if lo > 0 {
                    self.coeffs.drain(..lo);
                    self.offset += lo as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        let idx = exponent - self.offset;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let offset = self.offset;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(d, c)| (offset + d as i64, c))
    }

    /// Smallest exponent where the two polynomials differ.
    pub fn mismatch_with(&self, other: &Self) -> Option<Mismatch> {
        if self == other {
            return None;
        }
        let lo = match (self.min_exponent(), other.min_exponent()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("equal zero polynomials"),
        };
        let hi = self
            .max_exponent()
            .unwrap_or(lo)
            .max(other.max_exponent().unwrap_or(lo));
        (lo..=hi)
            .find(|&e| self.coeff(e) != other.coeff(e))
            .map(|e| Mismatch {
                exponent: e,
                lhs: self.coeff(e),
                rhs: other.coeff(e),
            })
    }

    /// Embeds into a truncated series at the given precision. The offset
    /// must be nonnegative; terms above the precision are dropped (the
    /// embedding is lossless whenever `precision >= max_exponent`).
    pub fn to_series(&self, precision: usize) -> Result<TruncatedSeries> {
        if let Some(lo) = self.min_exponent() {
            if lo < 0 {
                return Err(Error::NegativeExponentResidue {
                    exponent: lo,
                    coefficient: self.coeffs[0].clone(),
                });
            }
        }
        let mut s = TruncatedSeries::zero(precision);
        for (e, c) in self.terms() {
            s.add_term(c, e as usize);
        }
        Ok(s)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPolynomial::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self + &-rhs
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (da, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (db, cb) in rhs.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    coeffs[da + db] += ca * cb;
                }
            }
        }
        LaurentPolynomial::from_coeffs(self.offset + rhs.offset, coeffs)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Ascending exponents with `q^-2` style for negative powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (e, c) in self.terms() {
            let first = out.is_empty();
            push_term(&mut out, first, c, e);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(offset: i64, coeffs: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_trimming() {
        let p = poly(-2, &[0, 1, 0, 3, 0]);
        assert_eq!(p.min_exponent(), Some(-1));
        assert_eq!(p.max_exponent(), Some(1));
        assert!(poly(5, &[0, 0]).is_zero());
        assert_eq!(poly(5, &[0, 0]), LaurentPolynomial::zero());
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = poly(-1, &[1, -1]); // q^-1 - 1
        let b = poly(0, &[1, 1]); // 1 + q
        assert_eq!(&a * &b, poly(-1, &[1, 0, -1])); // q^-1 - q
        assert_eq!(&(&a + &b) - &a, b);
        let cancel = &a - &a;
        assert!(cancel.is_zero());
    }

    #[test]
    fn mul_by_monomial_shifts() {
        let a = poly(0, &[1, 2, 1]);
        let m = LaurentPolynomial::monomial_i64(1, -3);
        assert_eq!(&a * &m, poly(-3, &[1, 2, 1]));
    }

    #[test]
    fn embeds_into_series() {
        let p = poly(1, &[2, 0, -1]); // 2q - q^3
        let s = p.to_series(5).unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(&[0, 2, 0, -1, 0, 0]));
        // truncating embed drops the q^3 term
        let t = p.to_series(2).unwrap();
        assert_eq!(t, TruncatedSeries::from_ints(&[0, 2, 0]));
        let neg = poly(-1, &[1]);
        assert!(matches!(
            neg.to_series(4),
            Err(Error::NegativeExponentResidue { exponent: -1, .. })
        ));
    }

    #[test]
    fn mismatch_scans_from_lowest_exponent() {
        let a = poly(-2, &[1, 0, 3]);
        let b = poly(0, &[3]);
        let m = a.mismatch_with(&b).unwrap();
        assert_eq!(m.exponent, -2);
        assert_eq!(m.lhs, BigInt::from(1));
        assert_eq!(m.rhs, BigInt::from(0));
        assert!(poly(0, &[3]).mismatch_with(&b).is_none());
    }

    #[test]
    fn display_uses_caret_notation() {
        assert_eq!(poly(-2, &[1, 0, -2, 1]).to_string(), "q^-2 - 2 + q");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(poly(3, &[1]).to_string(), "q^3");
    }
}
