//! Exact q-series arithmetic and machine verification of the
//! Rogers-Ramanujan-Gordon identity family.
//!
//! For a fixed k >= 2 the products
//!
//! ```text
//! G_i = prod 1/(1-q^n)   over n not congruent to 0, +-(k+1-i) mod 2k+1
//! ```
//!
//! satisfy a subtract-and-divide recursion whose iterates G_s are again
//! power series with constant term 1 and rapidly growing vanishing order
//! (the "Empirical Hypothesis"), and whose coefficients count partitions
//! with a difference condition at distance k-1. The case k = 2 is the pair
//! of Rogers-Ramanujan identities. This crate computes every side of that
//! story in exact integer arithmetic at a configurable truncation order
//! and checks them against each other:
//!
//! - [`series`]: truncated power series with explicit precision tracking;
//! - [`laurent`]: exact Laurent polynomials for the matrix layer;
//! - [`products`]: Euler products and their restricted versions;
//! - [`gordon`]: the G-sequence by product, theta-quotient, closed form
//!   and recursion, plus the Empirical Hypothesis checks;
//! - [`matrices`]: the step matrices, their inverses and the h-matrices;
//! - [`partitions`]: the brute-force enumeration oracle and the
//!   combinatorial interpretations;
//! - [`verify`]: suite orchestration and report rendering for the CLI.
//!
//! Everything is immutable after construction and all operations are pure,
//! so independent checks can run on as many threads as rayon provides.

pub mod check;
pub mod error;
pub mod gordon;
pub mod guide;
pub mod laurent;
pub mod matrices;
pub mod partitions;
pub mod products;
pub mod series;
pub mod verify;

pub use check::{Mismatch, Verdict};
pub use error::{Error, Result};
pub use gordon::{
    closed_form_h, empirical_hypothesis_check, generate_sequence, h_equality_check, product_g,
    sequence_for_target, sum_form_g, theta_numerator, triple_product_check, EmpiricalCheckResult,
    GSequence, GordonIndex, SumForm,
};
pub use laurent::LaurentPolynomial;
pub use matrices::{
    a_matrix, b_matrix, expand_g_check, h_matrix, h_matrix_by_recursion, step_check,
    verify_inverse, LaurentMatrix,
};
pub use partitions::{
    count, enumerate, gf_gordon, gf_h_entry, gf_tail, multiplicity_split_check, satisfies_gordon,
    uniqueness_check, GordonConstraint, MultiplicityBound, Partition,
};
pub use products::{euler_product, restricted_euler_product};
pub use series::TruncatedSeries;
