//! The matrix form of the recursion: step matrices A_(j), their explicit
//! inverses B_(j), and the accumulated h-matrices h^(j) with
//! h^(0) = I and h^(j) = h^(j-1) A_(j) = A_(1) A_(2) ... A_(j).
//!
//! With G_(j) the column vector of the level-j series, the layer verifies
//!
//!   G_(j) = B_(j) G_(j-1),   A_(j) G_(j) = G_(j-1),   G_(0) = h^(j) G_(j).
//!
//! Matrices are exact Laurent-polynomial objects; they only meet truncated
//! series at application time. Rows and columns are written 1-based in
//! documentation and reports, matching the usual indexing of the entries
//! ih^(j)_l; the accessors below are 0-based like any Rust container.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::check::{Mismatch, Verdict};
use crate::error::{param_err, Error, Result};
use crate::gordon::GSequence;
use crate::laurent::LaurentPolynomial;
use crate::series::TruncatedSeries;

/// A square matrix of exact Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    k: usize,
    /// Row-major, length k*k.
    entries: Vec<LaurentPolynomial>,
}

impl LaurentMatrix {
    pub fn identity(k: usize) -> Self {
        let mut m = Self::zero(k);
        for r in 0..k {
            m.entries[r * k + r] = LaurentPolynomial::one();
        }
        m
    }

    pub fn zero(k: usize) -> Self {
        Self {
            k,
            entries: vec![LaurentPolynomial::zero(); k * k],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPolynomial>>) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "matrix must be square");
        Self {
            k,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// 0-based accessor; the 1-based (i, l) of the reports reads `entry(i-1, l-1)`.
    pub fn entry(&self, row: usize, col: usize) -> &LaurentPolynomial {
        &self.entries[row * self.k + col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: LaurentPolynomial) {
        self.entries[row * self.k + col] = value;
    }

    pub fn row(&self, row: usize) -> &[LaurentPolynomial] {
        &self.entries[row * self.k..(row + 1) * self.k]
    }

    /// Exact product of two matrices.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "dimension mismatch");
        let k = self.k;
        let mut out = Self::zero(k);
        for r in 0..k {
            for c in 0..k {
                let mut acc = LaurentPolynomial::zero();
                for t in 0..k {
                    let a = self.entry(r, t);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.entry(t, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.entries[r * k + c] = acc;
            }
        }
        out
    }

    /// First differing entry in row-major order, with the smallest
    /// exponent of disagreement inside it.
    pub fn mismatch_with(&self, other: &Self) -> Option<Mismatch> {
        assert_eq!(self.k, other.k, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .find_map(|(a, b)| a.mismatch_with(b))
    }

    /// Applies the matrix to a vector of truncated series.
    ///
    /// Negative-exponent entries are allowed as long as everything below
    /// q^0 cancels in each row sum; a surviving coefficient there is
    /// reported as [`Error::NegativeExponentResidue`]. Each result entry
    /// carries the best precision its inputs support: a term q^e * v_l is
    /// known up to q^{precision(v_l) + e}.
    pub fn apply(&self, v: &[TruncatedSeries]) -> Result<Vec<TruncatedSeries>> {
        if v.len() != self.k {
            return param_err(format!(
                "vector length {} does not match dimension {}",
                v.len(),
                self.k
            ));
        }
        (0..self.k).map(|r| self.apply_row(r, v)).collect()
    }

    fn apply_row(&self, r: usize, v: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        let pairs: Vec<(&LaurentPolynomial, &TruncatedSeries)> = self
            .row(r)
            .iter()
            .zip(v)
            .filter(|(p, _)| !p.is_zero())
            .collect();
        if pairs.is_empty() {
            let precision = v.iter().map(|s| s.precision()).min().unwrap_or(0);
            return Ok(TruncatedSeries::zero(precision));
        }
        let known_to = pairs
            .iter()
            .map(|(p, s)| s.precision() as i64 + p.min_exponent().unwrap())
            .min()
            .unwrap();
        if known_to < 0 {
            return Err(Error::PrecisionExhausted {
                needed: (-known_to) as usize,
                available: 0,
            });
        }
        // Buffer spans the lowest reachable exponent (possibly negative)
        // through the certified precision.
        let low = pairs
            .iter()
            .map(|(p, _)| p.min_exponent().unwrap())
            .min()
            .unwrap()
            .min(0);
        let mut buf = vec![BigInt::zero(); (known_to - low + 1) as usize];
        for (p, s) in &pairs {
            for (e, c) in p.terms() {
                for (d, sc) in s.coeffs().iter().enumerate() {
                    let pos = e + d as i64;
                    if pos > known_to {
                        break;
                    }
                    if !sc.is_zero() {
                        buf[(pos - low) as usize] += c * sc;
                    }
                }
            }
        }
        for e in low..0 {
            let c = &buf[(e - low) as usize];
            if !c.is_zero() {
                return Err(Error::NegativeExponentResidue {
                    exponent: e,
                    coefficient: c.clone(),
                });
            }
        }
        Ok(TruncatedSeries::from_coeffs(buf[(-low) as usize..].to_vec()))
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.k {
            write!(f, "[")?;
            for c in 0..self.k {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

fn check_k_j(k: usize, j: usize) -> Result<()> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    if j < 1 {
        return param_err(format!("j must be >= 1, got {j}"));
    }
    Ok(())
}

/// The step matrix A_(j): row r, column l holds q^{(l-1)j} when
/// r + l <= k+1 and 0 otherwise (1-based r, l).
pub fn a_matrix(k: usize, j: usize) -> Result<LaurentMatrix> {
    check_k_j(k, j)?;
    let mut m = LaurentMatrix::zero(k);
    for r in 1..=k {
        for l in 1..=(k + 1 - r) {
            m.set_entry(
                r - 1,
                l - 1,
                LaurentPolynomial::monomial_i64(1, ((l - 1) * j) as i64),
            );
        }
    }
    Ok(m)
}

/// The inverse step matrix B_(j): row 1 is (0, ..., 0, 1); row r >= 2
/// holds q^{-(r-1)j} at column k-r+1 and -q^{-(r-1)j} at column k-r+2.
pub fn b_matrix(k: usize, j: usize) -> Result<LaurentMatrix> {
    check_k_j(k, j)?;
    let mut m = LaurentMatrix::zero(k);
    m.set_entry(0, k - 1, LaurentPolynomial::one());
    for r in 2..=k {
        let e = -(((r - 1) * j) as i64);
        m.set_entry(r - 1, k - r, LaurentPolynomial::monomial_i64(1, e));
        m.set_entry(r - 1, k - r + 1, LaurentPolynomial::monomial_i64(-1, e));
    }
    Ok(m)
}

/// h^(j) as the accumulated product A_(1) A_(2) ... A_(j), with
/// h^(0) the identity.
pub fn h_matrix(k: usize, j: usize) -> Result<LaurentMatrix> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    let mut h = LaurentMatrix::identity(k);
    for t in 1..=j {
        h = h.mul(&a_matrix(k, t)?);
    }
    Ok(h)
}

/// h^(j) by the direct entry recursion
/// h^(j)_l = (h^(j-1)_1 + ... + h^(j-1)_{k-l+1}) q^{(l-1)j},
/// applied row by row. An independent code path from [`h_matrix`],
/// kept as a built-in cross-check.
pub fn h_matrix_by_recursion(k: usize, j: usize) -> Result<LaurentMatrix> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = vec![LaurentPolynomial::zero(); k];
        row[i] = LaurentPolynomial::one();
        for t in 1..=j {
            let mut next = Vec::with_capacity(k);
            for l in 1..=k {
                let mut acc = LaurentPolynomial::zero();
                for r in row.iter().take(k - l + 1) {
                    acc = &acc + r;
                }
                let shift = LaurentPolynomial::monomial_i64(1, ((l - 1) * t) as i64);
                next.push(&acc * &shift);
            }
            row = next;
        }
        rows.push(row);
    }
    Ok(LaurentMatrix::from_rows(rows))
}

/// Exact Laurent check that A_(j) and B_(j) are two-sided inverses.
pub fn verify_inverse(k: usize, j: usize) -> Result<Verdict> {
    let a = a_matrix(k, j)?;
    let b = b_matrix(k, j)?;
    let id = LaurentMatrix::identity(k);
    Ok(Verdict::from(a.mul(&b).mismatch_with(&id))
        .and(Verdict::from(b.mul(&a).mismatch_with(&id))))
}

/// Componentwise comparison of an applied row vector against stored
/// series, at shared precision.
fn vectors_agree(lhs: &[TruncatedSeries], rhs: &[&TruncatedSeries]) -> Verdict {
    for (a, b) in lhs.iter().zip(rhs) {
        if let Some(m) = a.agrees_with(b) {
            return Verdict::Fail(m);
        }
    }
    Verdict::Pass
}

fn residue_as_verdict(err: Error) -> Result<Verdict> {
    match err {
        Error::NegativeExponentResidue {
            exponent,
            coefficient,
        } => Ok(Verdict::Fail(Mismatch {
            exponent,
            lhs: coefficient,
            rhs: BigInt::zero(),
        })),
        other => Err(other),
    }
}

/// One recursion step in matrix form, on explicit level vectors:
/// checks both B_(j) prev = cur and A_(j) cur = prev.
pub fn step_check_vectors(
    k: usize,
    j: usize,
    prev: &[TruncatedSeries],
    cur: &[TruncatedSeries],
) -> Result<Verdict> {
    let b_form = match b_matrix(k, j)?.apply(prev) {
        Ok(image) => vectors_agree(&image, &cur.iter().collect::<Vec<_>>()),
        Err(e) => residue_as_verdict(e)?,
    };
    let a_form = match a_matrix(k, j)?.apply(cur) {
        Ok(image) => vectors_agree(&image, &prev.iter().collect::<Vec<_>>()),
        Err(e) => residue_as_verdict(e)?,
    };
    Ok(b_form.and(a_form))
}

/// One recursion step in matrix form against a generated sequence.
pub fn step_check(seq: &GSequence, j: usize) -> Result<Verdict> {
    check_k_j(seq.k(), j)?;
    let prev: Vec<TruncatedSeries> = seq.level(j - 1)?.into_iter().cloned().collect();
    let cur: Vec<TruncatedSeries> = seq.level(j)?.into_iter().cloned().collect();
    step_check_vectors(seq.k(), j, &prev, &cur)
}

/// Verifies the accumulated expansion G_(0) = h^(j) G_(j) at depth j.
pub fn expand_g_check(seq: &GSequence, j: usize) -> Result<Verdict> {
    let level: Vec<TruncatedSeries> = seq.level(j)?.into_iter().cloned().collect();
    let image = match h_matrix(seq.k(), j)?.apply(&level) {
        Ok(image) => image,
        Err(e) => return residue_as_verdict(e),
    };
    Ok(vectors_agree(&image, &seq.level(0)?))
}
