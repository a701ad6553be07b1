//! Error type shared by all series, matrix and verification operations.

use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by series arithmetic and the verification pipeline.
///
/// `NotDivisible` and `NegativeExponentResidue` deserve a note: they signal
/// that a divisibility claim the identities depend on failed at a concrete
/// exponent. They are verification outcomes, not bugs, and the verifier
/// reports them with their witness instead of aborting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term {0} is not a unit; series inversion needs +1 or -1")]
    NonUnitConstantTerm(BigInt),

    #[error("not divisible by q^{divisor}: coefficient of q^{exponent} is {coefficient}")]
    NotDivisible {
        divisor: usize,
        exponent: usize,
        coefficient: BigInt,
    },

    #[error("precision exhausted: needed {needed} coefficients, have {available}")]
    PrecisionExhausted { needed: usize, available: usize },

    #[error("insufficient precision {available} to certify vanishing order >= {required}")]
    InsufficientPrecision { required: usize, available: usize },

    #[error("nonzero coefficient {coefficient} at negative exponent q^{exponent}")]
    NegativeExponentResidue { exponent: i64, coefficient: BigInt },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ParamOutOfRange(msg.into()))
}

/// Checks the common `k >= 2, 1 <= i <= k` parameter pair.
pub(crate) fn check_k_i(k: usize, i: usize) -> Result<()> {
    if k < 2 {
        return param_err(format!("k must be >= 2, got {k}"));
    }
    if i < 1 || i > k {
        return param_err(format!("i must satisfy 1 <= i <= k = {k}, got {i}"));
    }
    Ok(())
}
