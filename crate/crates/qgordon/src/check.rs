//! Pass/fail verdicts with coefficient-level witnesses.

use num_bigint::BigInt;

/// The smallest exponent at which two expansions disagree, with both values.
///
/// Exponents are `i64` so that Laurent comparisons can report negative
/// positions (a failed divisibility shows up as a residue below q^0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "q^{}: {} != {}",
            self.exponent, self.lhs, self.rhs
        )
    }
}

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Mismatch),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn mismatch(&self) -> Option<&Mismatch> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(m) => Some(m),
        }
    }

    /// Combines sequential sub-checks, keeping the first failure.
    pub fn and(self, other: Verdict) -> Verdict {
        match self {
            Verdict::Pass => other,
            fail => fail,
        }
    }
}

impl From<Option<Mismatch>> for Verdict {
    fn from(m: Option<Mismatch>) -> Self {
        match m {
            None => Verdict::Pass,
            Some(m) => Verdict::Fail(m),
        }
    }
}
