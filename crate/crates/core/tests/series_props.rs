//! Property tests for the series algebra.

use latpath_core::rational::{rat, ratio};
use latpath_core::series::{solve_fixed_point, Series};
use latpath_core::QSeries;
use num::BigRational;
use proptest::prelude::*;

const ORDER: usize = 8;

fn coeff_strategy() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn series_strategy() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(coeff_strategy(), ORDER + 1).prop_map(Series::from_coeffs)
}

fn unit_series_strategy() -> impl Strategy<Value = QSeries> {
    series_strategy().prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = rat(1);
        Series::from_coeffs(coeffs)
    })
}

fn zero_constant_strategy() -> impl Strategy<Value = QSeries> {
    series_strategy().prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = rat(0);
        Series::from_coeffs(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_commutative_and_associative(a in series_strategy(),
                                          b in series_strategy(),
                                          c in series_strategy()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes_over_add(a in series_strategy(),
                                b in series_strategy(),
                                c in series_strategy()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse_multiplies_to_one(a in unit_series_strategy()) {
        let inv = a.invert_unit().unwrap();
        prop_assert_eq!(a.mul(&inv), QSeries::one(ORDER));
    }

    #[test]
    fn sqrt_squares_back(a in unit_series_strategy()) {
        let root = a.sqrt_unit().unwrap();
        prop_assert_eq!(root.mul(&root), a);
    }

    #[test]
    fn compositional_inverse_round_trips(a in zero_constant_strategy()) {
        prop_assume!(!a.coeff(1).eq(&rat(0)));
        let inv = a.compositional_inverse().unwrap();
        prop_assert_eq!(a.compose(&inv).unwrap(), QSeries::identity(ORDER));
        prop_assert_eq!(inv.compose(&a).unwrap(), QSeries::identity(ORDER));
        prop_assert!(inv
            .compositional_inverse()
            .unwrap()
            .agrees_with(&a));
    }

    #[test]
    fn shift_then_divide_is_identity(a in series_strategy(), k in 0usize..4) {
        prop_assert_eq!(a.shift(k).div_by_power(k).unwrap(), a);
    }

    #[test]
    fn fixed_point_solution_satisfies_its_equation(c in coeff_strategy()) {
        // s = 1 + c * t * s^2 is t-adically contracting for any c.
        let builder = |s: &QSeries| {
            QSeries::one(ORDER).add(&s.mul(s).shift(1).truncated(ORDER).scale(&c))
        };
        let solved = solve_fixed_point(ORDER, builder).unwrap();
        prop_assert_eq!(builder(&solved), solved);
    }

    #[test]
    fn compose_is_morphism_for_mul(a in series_strategy(),
                                   b in series_strategy(),
                                   inner in zero_constant_strategy()) {
        let lhs = a.mul(&b).compose(&inner).unwrap();
        let rhs = a.compose(&inner).unwrap().mul(&b.compose(&inner).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
