//! Property tests: ring laws on random inputs, inversion and shift round
//! trips, and exhaustive comparisons of the series machinery against
//! small brute-force counters that live only in this file.

use proptest::prelude::*;

use qgordon::products::residue_allowed;
use qgordon::{
    euler_product, restricted_euler_product, satisfies_gordon, LaurentPolynomial, TruncatedSeries,
};

fn series(max_precision: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-9i64..=9, 1..=max_precision + 1)
        .prop_map(|v| TruncatedSeries::from_ints(&v))
}

fn unit_series(max_precision: usize) -> impl Strategy<Value = TruncatedSeries> {
    (series(max_precision), any::<bool>()).prop_map(|(s, positive)| {
        let mut coeffs: Vec<i64> = s
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        coeffs[0] = if positive { 1 } else { -1 };
        TruncatedSeries::from_ints(&coeffs)
    })
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-6i64..=6, prop::collection::vec(-9i64..=9, 0..=8)).prop_map(|(offset, coeffs)| {
        LaurentPolynomial::from_coeffs(offset, coeffs.into_iter().map(Into::into).collect())
    })
}

proptest! {
    #[test]
    fn addition_laws(a in series(24), b in series(24), c in series(24)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        let zero = TruncatedSeries::zero(a.precision());
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_laws(a in series(16), b in series(16), c in series(16)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let one = TruncatedSeries::one(a.precision());
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn inversion_round_trip(a in unit_series(24)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, TruncatedSeries::one(a.precision()));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn shift_round_trip(a in series(24), m in 0usize..=12) {
        prop_assert_eq!(a.shift_mul(m).shift_divide(m).unwrap(), a.clone());
        // and the shifted series keeps every known coefficient
        prop_assert_eq!(a.shift_mul(m).precision(), a.precision() + m);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn laurent_embedding_is_multiplicative(a in laurent(), b in laurent()) {
        // shift both into nonnegative exponents, then embedding at a
        // precision clearing both degrees must commute with products
        let shift = LaurentPolynomial::monomial_i64(1, 6);
        let a = &a * &shift;
        let b = &b * &shift;
        let n = 40;
        let lhs = (&a * &b).to_series(n).unwrap();
        let rhs = &a.to_series(n).unwrap() * &b.to_series(n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

mod common;
use common::{all_partitions, multiplicity_form};

fn count_with_allowed_parts(m: usize, allowed: &dyn Fn(usize) -> bool) -> u64 {
    fn descend(remaining: usize, max_part: usize, allowed: &dyn Fn(usize) -> bool) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut n = 0;
        for part in 1..=max_part.min(remaining) {
            if allowed(part) {
                n += descend(remaining - part, part, allowed);
            }
        }
        n
    }
    descend(m, m, allowed)
}

#[test]
fn euler_product_counts_all_partitions() {
    let series = euler_product(30);
    for m in 0..=30 {
        let expected = all_partitions(m).len() as u64;
        assert_eq!(
            series.coeff(m),
            &num_bigint::BigInt::from(expected),
            "partition count of {m}"
        );
    }
}

#[test]
fn restricted_products_count_allowed_part_partitions() {
    for k in 2..=5usize {
        for i in 1..=k {
            let series = restricted_euler_product(k, i, 30).unwrap();
            for m in 0..=30 {
                let expected = count_with_allowed_parts(m, &|n| residue_allowed(k, i, n));
                assert_eq!(
                    series.coeff(m),
                    &num_bigint::BigInt::from(expected),
                    "k={k} i={i} m={m}"
                );
            }
        }
    }
}

#[test]
fn distance_form_equals_multiplicity_form() {
    for m in 0..=25 {
        for parts in all_partitions(m) {
            for k in 2..=5 {
                assert_eq!(
                    satisfies_gordon(&parts, k),
                    multiplicity_form(&parts, k),
                    "m={m} k={k} parts={parts:?}"
                );
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_and_consistent() {
    use qgordon::{count, enumerate, GordonConstraint};
    for (k, i) in [(2, 1), (3, 2), (5, 5)] {
        let constraint = GordonConstraint::gordon_identity(k, i).unwrap();
        for m in 0..=14 {
            let listed = enumerate(m, &constraint);
            assert_eq!(listed.len() as u64, count(m, &constraint));
            for p in &listed {
                assert!(constraint.admits(p));
                assert_eq!(p.weight(), m);
            }
            for w in listed.windows(2) {
                assert!(w[0] > w[1], "lexicographically decreasing order");
            }
        }
    }
}
