use lambda_umbral::bivariate::{substitute_sum, BiSeries};
use lambda_umbral::ring::{rat, ratio, Rational};
use lambda_umbral::series::{Series, Var};
use proptest::prelude::*;

const N: usize = 8;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(small_rational(), N).prop_map(|c| Series::from_coeffs(Var::T, N, c))
}

fn delta() -> impl Strategy<Value = Series> {
    (series(), 1i64..=5).prop_map(|(s, a)| {
        let mut c = s.into_coeffs();
        c[0] = rat(0);
        c[1] = rat(a);
        Series::from_coeffs(Var::T, N, c)
    })
}

fn unit_constant() -> impl Strategy<Value = Series> {
    series().prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = rat(1);
        Series::from_coeffs(Var::T, N, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
    }

    #[test]
    fn reciprocal_inverts(a in unit_constant()) {
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(a.mul(&r).unwrap(), Series::one(Var::T, N));
    }

    #[test]
    fn exp_log_inverse(d in delta()) {
        prop_assert_eq!(d.exp().unwrap().log().unwrap(), d);
    }

    #[test]
    fn exp_is_multiplicative(a in delta(), b in delta()) {
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative(a in series(), f in delta(), g in delta()) {
        let lhs = a.compose(&f).unwrap().compose(&g).unwrap();
        let rhs = a.compose(&f.compose(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(a in series(), b in series()) {
        let a = a.with_var(Var::X);
        let b = b.with_var(Var::X);
        let lhs = substitute_sum(&a.mul(&b).unwrap());
        let rhs = substitute_sum(&a).mul(&substitute_sum(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_restricts_to_identity(a in series()) {
        let a = a.with_var(Var::X);
        prop_assert_eq!(substitute_sum(&a).at_y_zero(), a.clone());
        prop_assert_eq!(BiSeries::from_x(&a).at_y_zero(), a);
    }
}
