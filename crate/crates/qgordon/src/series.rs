//! Truncated formal power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] stores the exact coefficients of q^0 .. q^N for an
//! explicit precision N. Coefficients above q^N are *unknown*, not zero:
//! every binary operation returns the minimum of the two precisions, and
//! comparisons only ever inspect the shared range. Reading a coefficient
//! beyond the precision is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::check::Mismatch;
use crate::error::{Error, Result};

/// A formal power series in q, known exactly up to and including q^precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Invariant: `coeffs.len() == precision + 1`, so it is never empty.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series at the given precision.
    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); precision + 1],
        }
    }

    /// The constant series 1 at the given precision.
    pub fn one(precision: usize) -> Self {
        Self::monomial(BigInt::one(), 0, precision)
    }

    /// The series `c * q^exponent`. A monomial beyond the precision is
    /// indistinguishable from zero and yields the zero series.
    pub fn monomial(c: BigInt, exponent: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exponent <= precision {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Builds a series from its coefficient list; precision is `len - 1`.
    ///
    /// # Panics
    /// Panics on an empty list (a series always knows its constant term).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least q^0");
        Self { coeffs }
    }

    /// Convenience constructor from machine integers, mostly for tests
    /// and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The exact coefficient of q^d.
    ///
    /// # Panics
    /// Panics if `d` exceeds the precision: that coefficient is unknown,
    /// and treating it as zero would fake verification results.
    pub fn coeff(&self, d: usize) -> &BigInt {
        assert!(
            d <= self.precision(),
            "coefficient of q^{d} requested, but series is only known to q^{}",
            self.precision()
        );
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops knowledge above `precision`.
    ///
    /// # Panics
    /// Panics when asked to *raise* the precision; unknown coefficients
    /// cannot be invented.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(
            precision <= self.precision(),
            "cannot raise precision from {} to {precision}",
            self.precision()
        );
        Self {
            coeffs: self.coeffs[..=precision].to_vec(),
        }
    }

    pub fn shared_precision(&self, other: &Self) -> usize {
        self.precision().min(other.precision())
    }

    /// Smallest d with a nonzero coefficient, or `None` when every known
    /// coefficient vanishes (the order is then `> precision`, unknown).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicative inverse to the same precision.
    ///
    /// The constant term must be +1 or -1 so the inverse stays integral.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(Error::NonUnitConstantTerm(c0.clone()));
        }
        let n = self.precision();
        let mut inv = vec![BigInt::zero(); n + 1];
        // c0 = ±1, so 1/c0 = c0 and the usual recurrence stays in Z:
        // b_d = (1/c0) * (-(a_1 b_{d-1} + ... + a_d b_0))
        inv[0] = c0.clone();
        for d in 1..=n {
            let mut acc = BigInt::zero();
            for t in 1..=d {
                if !self.coeffs[t].is_zero() && !inv[d - t].is_zero() {
                    acc += &self.coeffs[t] * &inv[d - t];
                }
            }
            inv[d] = -acc * c0;
        }
        Ok(Self { coeffs: inv })
    }

    /// Divides by q^m, i.e. shifts every exponent down by m.
    ///
    /// Requires the coefficients of q^0 .. q^{m-1} to vanish; a nonzero one
    /// is a [`Error::NotDivisible`] verification failure. The result loses
    /// m coefficients of precision, and the call is
    /// [`Error::PrecisionExhausted`] if fewer than that are known.
    pub fn shift_divide(&self, m: usize) -> Result<Self> {
        let head = m.min(self.coeffs.len());
        for d in 0..head {
            if !self.coeffs[d].is_zero() {
                return Err(Error::NotDivisible {
                    divisor: m,
                    exponent: d,
                    coefficient: self.coeffs[d].clone(),
                });
            }
        }
        if m > self.precision() {
            return Err(Error::PrecisionExhausted {
                needed: m,
                available: self.precision(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// Multiplies by q^m; every known coefficient stays known, so the
    /// precision *rises* by m.
    pub fn shift_mul(&self, m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Multiplies by the geometric expansion 1/(1-q^n) = 1 + q^n + q^{2n} + ...
    /// via the forward recurrence c[d] += c[d-n], avoiding a dense product.
    pub(crate) fn mul_geometric_inverse(&self, n: usize) -> Self {
        assert!(n >= 1, "geometric factor needs n >= 1");
        let mut coeffs = self.coeffs.clone();
        for d in n..coeffs.len() {
            if !coeffs[d - n].is_zero() {
                let carry = coeffs[d - n].clone();
                coeffs[d] += carry;
            }
        }
        Self { coeffs }
    }

    /// Multiplies by the binomial (1 - q^m) without a full Cauchy product.
    pub fn mul_one_minus(&self, m: usize) -> Self {
        let n = self.precision();
        let mut coeffs = self.coeffs.clone();
        for d in (0..=n).rev() {
            if d >= m && !self.coeffs[d - m].is_zero() {
                coeffs[d] -= &self.coeffs[d - m];
            }
        }
        Self { coeffs }
    }

    /// Adds `c * q^exponent` in place; a term beyond the precision is
    /// silently immaterial (the series is only claimed up to q^precision).
    pub fn add_term(&mut self, c: &BigInt, exponent: usize) {
        if exponent <= self.precision() {
            self.coeffs[exponent] += c;
        }
    }

    /// Compares on the shared precision, returning the smallest exponent
    /// of disagreement. Exponents beyond the shared precision are never
    /// consulted, so "unknown" can not leak into a verdict.
    pub fn agrees_with(&self, other: &Self) -> Option<Mismatch> {
        let n = self.shared_precision(other);
        for d in 0..=n {
            if self.coeffs[d] != other.coeffs[d] {
                return Some(Mismatch {
                    exponent: d as i64,
                    lhs: self.coeffs[d].clone(),
                    rhs: other.coeffs[d].clone(),
                });
            }
        }
        None
    }
}

fn add_impl(a: &TruncatedSeries, b: &TruncatedSeries, negate_b: bool) -> TruncatedSeries {
    let n = a.shared_precision(b);
    let coeffs = (0..=n)
        .map(|d| {
            if negate_b {
                &a.coeffs[d] - &b.coeffs[d]
            } else {
                &a.coeffs[d] + &b.coeffs[d]
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        add_impl(self, rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        add_impl(self, rhs, true)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated at the shared precision.
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let n = self.shared_precision(rhs);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (da, ca) in self.coeffs.iter().enumerate().take(n + 1) {
            if ca.is_zero() {
                continue;
            }
            for (db, cb) in rhs.coeffs.iter().enumerate().take(n + 1 - da) {
                if !cb.is_zero() {
                    coeffs[da + db] += ca * cb;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// Renders one signed monomial; shared by the series and Laurent printers.
pub(crate) fn push_term(out: &mut String, first: bool, c: &BigInt, exp: i64) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = c.abs();
    if exp == 0 {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        if exp == 1 {
            out.push('q');
        } else {
            out.push_str(&format!("q^{exp}"));
        }
    }
}

impl fmt::Display for TruncatedSeries {
    /// Stable exponent-ascending rendering, e.g. `1 - q^2 - q^3 + q^9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let first = out.is_empty();
                push_term(&mut out, first, c, d as i64);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
