//! The series family G_1, G_2, ... attached to a modulus 2k+1, computed by
//! every route the theory provides:
//!
//! - [`product_g`]: the defining restricted Euler product (the "given" side);
//! - [`theta_numerator`] and [`sum_form_g`]: the two theta-quotient forms
//!   obtained from the specialized Jacobi triple product identity;
//! - [`closed_form_h`]: the closed-form alternating sum valid at every
//!   depth j;
//! - [`generate_sequence`]: the subtract-and-divide recursion
//!   G_{(k-1)j+i} = (G_{(k-1)(j-1)+k-i+1} - G_{(k-1)(j-1)+k-i+2}) / q^{(i-1)j}
//!   that discovers the deeper series from the seed block G_1 .. G_k.
//!
//! [`empirical_hypothesis_check`] certifies the key vanishing property:
//! each G_{(k-1)j+i} is 1 + O(q^{j+1}) (or 1 + O(q^{j+2}) when i = k).

use num_bigint::BigInt;
use num_traits::One;

use crate::check::Verdict;
use crate::error::{check_k_i, param_err, Error, Result};
use crate::products::{euler_product, excluded_binomial_product, restricted_euler_product};
use crate::series::TruncatedSeries;

/// A position in the doubly-indexed family: level j >= 0 and column
/// i in 1..=k, with linear index s = (k-1)j + i.
///
/// Boundary positions coincide: (j, k) and (j+1, 1) denote the same series,
/// and the linear index makes that structural. [`GordonIndex::from_linear`]
/// picks the canonical decomposition with i >= 2 whenever s > k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GordonIndex {
    k: usize,
    j: usize,
    i: usize,
}

impl GordonIndex {
    pub fn new(k: usize, j: usize, i: usize) -> Result<Self> {
        check_k_i(k, i)?;
        Ok(Self { k, j, i })
    }

    /// Canonical decomposition of a linear index s >= 1.
    pub fn from_linear(k: usize, s: usize) -> Result<Self> {
        if k < 2 {
            return param_err(format!("k must be >= 2, got {k}"));
        }
        if s == 0 {
            return param_err("linear index s must be >= 1".to_string());
        }
        if s <= k {
            Ok(Self { k, j: 0, i: s })
        } else {
            let j = (s - 2) / (k - 1);
            let i = s - (k - 1) * j;
            debug_assert!((2..=k).contains(&i));
            Ok(Self { k, j, i })
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn linear(&self) -> usize {
        (self.k - 1) * self.j + self.i
    }

    /// The vanishing order the Empirical Hypothesis demands of G_s - 1:
    /// j+1 for i <= k-1 and j+2 for i = k. The two decompositions of a
    /// boundary index agree on this value.
    pub fn required_order(&self) -> usize {
        if self.i == self.k {
            self.j + 2
        } else {
            self.j + 1
        }
    }
}

impl std::fmt::Display for GordonIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G_{} (k={}, j={}, i={})", self.linear(), self.k, self.j, self.i)
    }
}

/// The product side: prod 1/(1-q^n) over n not congruent to
/// 0, +-(k+1-i) mod 2k+1.
pub fn product_g(k: usize, i: usize, precision: usize) -> Result<TruncatedSeries> {
    restricted_euler_product(k, i, precision)
}

/// lam choose 2, safe at lam = 0.
fn choose2(lam: usize) -> usize {
    lam * lam.saturating_sub(1) / 2
}

/// The theta-sum numerator
/// 1 + sum_{lam>=1} (-1)^lam q^{(2k+1) lam(lam-1)/2 + (k-i+1) lam} (1 + q^{(2i-1) lam}).
///
/// The lambda-sum stops once its leading exponent passes the precision;
/// the exponents are strictly increasing in lambda so nothing is lost.
pub fn theta_numerator(k: usize, i: usize, precision: usize) -> Result<TruncatedSeries> {
    check_k_i(k, i)?;
    let mut numerator = TruncatedSeries::one(precision);
    let mut lam = 1usize;
    loop {
        let base = (2 * k + 1) * choose2(lam) + (k - i + 1) * lam;
        if base > precision {
            break;
        }
        let sign = if lam % 2 == 1 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        numerator.add_term(&sign, base);
        numerator.add_term(&sign, base + (2 * i - 1) * lam);
        lam += 1;
    }
    Ok(numerator)
}

/// Which of the two theta-quotient arrangements of G_i to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumForm {
    /// Bilateral sum paired as (+lam, -lam):
    /// numerator 1 + sum (-1)^lam q^{(2k+1)C(lam,2)+(k-i+1)lam}(1 + q^{(2i-1)lam}).
    First,
    /// Re-paired as (+lam, -(lam+1)):
    /// numerator sum_{lam>=0} (-1)^lam q^{(2k+1)C(lam,2)+(k+i)lam}(1 - q^{(k-i+1)(2lam+1)}).
    Second,
}

/// A theta-quotient form of G_i: numerator times the Euler product.
pub fn sum_form_g(
    k: usize,
    i: usize,
    precision: usize,
    variant: SumForm,
) -> Result<TruncatedSeries> {
    check_k_i(k, i)?;
    let numerator = match variant {
        SumForm::First => theta_numerator(k, i, precision)?,
        SumForm::Second => {
            let mut numerator = TruncatedSeries::zero(precision);
            let mut lam = 0usize;
            loop {
                let base = (2 * k + 1) * choose2(lam) + (k + i) * lam;
                if base > precision {
                    break;
                }
                let sign = if lam % 2 == 1 {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                };
                numerator.add_term(&sign, base);
                numerator.add_term(&-sign, base + (k - i + 1) * (2 * lam + 1));
                lam += 1;
            }
            numerator
        }
    };
    Ok(&numerator * &euler_product(precision))
}

/// The depth-j closed form H_{(k-1)j+i}:
///
/// sum_{lam>=0} (-1)^lam q^{(2k+1)C(lam,2) + [k(j+1)+i] lam}
///   (1-q^{lam+1}) ... (1-q^{lam+j}) (1 - q^{(k-i+1)(2lam+j+1)})
///
/// all divided by prod (1-q^n), i.e. multiplied by the Euler product.
/// At j = 0 this is exactly the [`SumForm::Second`] quotient.
pub fn closed_form_h(k: usize, j: usize, i: usize, precision: usize) -> Result<TruncatedSeries> {
    check_k_i(k, i)?;
    let numerator = closed_form_numerator(k, j, i, precision);
    Ok(&numerator * &euler_product(precision))
}

fn closed_form_numerator(k: usize, j: usize, i: usize, precision: usize) -> TruncatedSeries {
    let mut numerator = TruncatedSeries::zero(precision);
    let mut lam = 0usize;
    loop {
        let base = (2 * k + 1) * choose2(lam) + (k * (j + 1) + i) * lam;
        if base > precision {
            break;
        }
        // (1-q^{lam+1})...(1-q^{lam+j})(1 - q^{(k-i+1)(2lam+j+1)}),
        // expanded in the window that survives the shift by q^base.
        let mut term = TruncatedSeries::one(precision - base);
        for t in 1..=j {
            term = term.mul_one_minus(lam + t);
        }
        term = term.mul_one_minus((k - i + 1) * (2 * lam + j + 1));
        let negate = lam % 2 == 1;
        for (d, c) in term.coeffs().iter().enumerate() {
            if negate {
                numerator.add_term(&-c, base + d);
            } else {
                numerator.add_term(c, base + d);
            }
        }
        lam += 1;
    }
    numerator
}

/// Cumulative q-power lost by the divisions along the dependency chain of
/// each entry, indexed by linear index s - 1. Entry s computed at working
/// precision N is exact to q^{N - loss[s-1]}; it is not computable at all
/// once the loss exceeds N. The loss is zero on the seed block and grows
/// monotonically in s, bounded by (k-1) jmax (jmax+1) / 2.
pub fn division_loss_table(k: usize, jmax: usize) -> Result<Vec<usize>> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    let smax = (k - 1) * jmax + k;
    let mut loss = vec![0usize; smax];
    for j in 1..=jmax {
        for i in 2..=k {
            let s = (k - 1) * j + i;
            let s1 = (k - 1) * (j - 1) + (k - i + 1);
            let s2 = s1 + 1;
            loss[s - 1] = loss[s1 - 1].max(loss[s2 - 1]) + (i - 1) * j;
        }
    }
    Ok(loss)
}

/// Working precision needed so every entry down to depth `jmax` keeps at
/// least `target` exact coefficients.
pub fn precision_for_depth(k: usize, jmax: usize, target: usize) -> Result<usize> {
    let table = division_loss_table(k, jmax)?;
    Ok(target + table.last().copied().unwrap_or(0))
}

/// The recursion-generated family G_1 .. G_{(k-1)jmax+k}.
///
/// Each entry carries its own precision: a division by q^m costs m
/// coefficients, so deeper entries know fewer of them. Generation stops
/// early, recording [`GSequence::exhausted_at`], when the next division
/// would leave no coefficients at all; entries past that point are
/// reported as [`Error::PrecisionExhausted`] on access.
#[derive(Debug, Clone)]
pub struct GSequence {
    k: usize,
    jmax: usize,
    entries: Vec<TruncatedSeries>,
    exhausted_at: Option<usize>,
}

/// Runs the defining recursion, seeding G_1 .. G_k from the product sides.
///
/// A [`Error::NotDivisible`] from an interior division is propagated: it
/// would falsify the divisibility the closed forms guarantee, and callers
/// surface it as a verification failure with its witness.
pub fn generate_sequence(k: usize, jmax: usize, precision: usize) -> Result<GSequence> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    let mut entries = Vec::with_capacity((k - 1) * jmax + k);
    for i in 1..=k {
        entries.push(product_g(k, i, precision)?);
    }
    let mut exhausted_at = None;
    'outer: for j in 1..=jmax {
        for i in 2..=k {
            let s1 = (k - 1) * (j - 1) + (k - i + 1);
            let s2 = s1 + 1;
            let difference = &entries[s1 - 1] - &entries[s2 - 1];
            match difference.shift_divide((i - 1) * j) {
                Ok(next) => entries.push(next),
                Err(Error::PrecisionExhausted { .. }) => {
                    exhausted_at = Some((k - 1) * j + i);
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(GSequence {
        k,
        jmax,
        entries,
        exhausted_at,
    })
}

/// Convenience wrapper that raises the working precision so every entry
/// down to `jmax` still has `target` exact coefficients.
pub fn sequence_for_target(k: usize, jmax: usize, target: usize) -> Result<GSequence> {
    generate_sequence(k, jmax, precision_for_depth(k, jmax, target)?)
}

impl GSequence {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn jmax(&self) -> usize {
        self.jmax
    }

    /// Largest linear index actually computed.
    pub fn last_index(&self) -> usize {
        self.entries.len()
    }

    /// Largest linear index requested, (k-1) jmax + k.
    pub fn requested_last_index(&self) -> usize {
        (self.k - 1) * self.jmax + self.k
    }

    /// First linear index that ran out of precision, if any.
    pub fn exhausted_at(&self) -> Option<usize> {
        self.exhausted_at
    }

    pub fn get(&self, s: usize) -> Option<&TruncatedSeries> {
        if s == 0 {
            None
        } else {
            self.entries.get(s - 1)
        }
    }

    /// The entry with linear index s, s >= 1.
    pub fn entry(&self, s: usize) -> Result<&TruncatedSeries> {
        if s == 0 || s > self.requested_last_index() {
            return param_err(format!(
                "linear index {s} outside the generated range 1..={}",
                self.requested_last_index()
            ));
        }
        self.get(s).ok_or(Error::PrecisionExhausted {
            needed: s,
            available: self.entries.len(),
        })
    }

    /// True when the whole level-j block G_{(k-1)j+1} .. G_{(k-1)j+k}
    /// was computed.
    pub fn level_available(&self, j: usize) -> bool {
        j <= self.jmax && (self.k - 1) * j + self.k <= self.entries.len()
    }

    /// The level-j block as a vector of k series.
    pub fn level(&self, j: usize) -> Result<Vec<&TruncatedSeries>> {
        (1..=self.k)
            .map(|i| self.entry((self.k - 1) * j + i))
            .collect()
    }

    /// Runs the Empirical Hypothesis check on the entry at (j, i).
    pub fn empirical_check(&self, j: usize, i: usize) -> Result<EmpiricalCheckResult> {
        let index = GordonIndex::new(self.k, j, i)?;
        let g = self.entry(index.linear())?;
        EmpiricalCheckResult::evaluate(index, g)
    }
}

/// Outcome of one Empirical Hypothesis instance.
#[derive(Debug, Clone)]
pub struct EmpiricalCheckResult {
    pub index: GordonIndex,
    /// j+1, or j+2 when i = k.
    pub required_order: usize,
    /// Order of G_s - 1; `None` when it vanishes through the whole
    /// available precision.
    pub observed_order: Option<usize>,
    /// The gamma series with G_s = 1 + q^{required_order} * gamma; present
    /// exactly when the check passes.
    pub remainder: Option<TruncatedSeries>,
}

impl EmpiricalCheckResult {
    fn evaluate(index: GordonIndex, g: &TruncatedSeries) -> Result<Self> {
        let required_order = index.required_order();
        let delta = g - &TruncatedSeries::one(g.precision());
        let observed_order = delta.order();
        let pass = match observed_order {
            Some(d) => d >= required_order,
            None => {
                if g.precision() < required_order {
                    return Err(Error::InsufficientPrecision {
                        required: required_order,
                        available: g.precision(),
                    });
                }
                true
            }
        };
        let remainder = if pass {
            Some(
                delta
                    .shift_divide(required_order)
                    .expect("vanishing order was just certified"),
            )
        } else {
            None
        };
        Ok(Self {
            index,
            required_order,
            observed_order,
            remainder,
        })
    }

    /// Constant term 1 and vanishing order at least the required one.
    pub fn passes(&self) -> bool {
        self.remainder.is_some()
    }
}

/// Builds the sequence to depth j and runs one Empirical Hypothesis check.
/// When several indices are checked, build the sequence once and use
/// [`GSequence::empirical_check`].
pub fn empirical_hypothesis_check(
    k: usize,
    j: usize,
    i: usize,
    precision: usize,
) -> Result<EmpiricalCheckResult> {
    check_k_i(k, i)?;
    generate_sequence(k, j, precision)?.empirical_check(j, i)
}

/// Verifies that the two closed forms meeting at a boundary index agree:
/// H_{(k-1)j+1} = H_{(k-1)(j-1)+k}, both sides expanded independently.
pub fn h_equality_check(k: usize, j: usize, precision: usize) -> Result<Verdict> {
    if j < 1 {
        return param_err("H-equality needs j >= 1".to_string());
    }
    let lhs = closed_form_h(k, j, 1, precision)?;
    let rhs = closed_form_h(k, j - 1, k, precision)?;
    Ok(lhs.agrees_with(&rhs).into())
}

/// Verifies the specialized triple product identity: the theta numerator
/// equals the brute-force product prod (1-q^n) over the excluded residues
/// n congruent to 0, +-(k+1-i) mod 2k+1.
pub fn triple_product_check(k: usize, i: usize, precision: usize) -> Result<Verdict> {
    let theta = theta_numerator(k, i, precision)?;
    let product = excluded_binomial_product(k, i, precision)?;
    Ok(theta.agrees_with(&product).into())
}
