use num_traits::Zero;
use proptest::prelude::*;

use powersumkit::exact::{poly_eval, rat, rational_normalize, Integer, PiPowerValue, Rational, RationalPolynomial};
use powersumkit::powersums::{
    s_brute, s_lang_original, s_lang_refined, s_newton_recurrence, s_range, PowerSumQuery,
};
use powersumkit::symfuncs::{
    elementary_prefix, newton_girard_power_sums, orthogonality_residual, power_sum_via_lang,
    power_sums_direct, SequenceSpec,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn polynomial() -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec(rational(), 0..6).prop_map(RationalPolynomial::new)
}

fn sequence() -> impl Strategy<Value = SequenceSpec> {
    prop_oneof![
        (1u32..8, 0u32..10).prop_map(|(r, extra)| SequenceSpec::NaturalsFrom { r, n: r + extra }),
        (0u32..10).prop_map(SequenceSpec::Ones),
        (0u32..8).prop_map(SequenceSpec::Squares),
        (0u32..8).prop_map(SequenceSpec::OddSquares),
        (0u32..8).prop_map(SequenceSpec::DoubledTriangulars),
        (0u32..8).prop_map(SequenceSpec::InverseSquares),
        prop::collection::vec(rational(), 0..7).prop_map(SequenceSpec::Explicit),
    ]
}

proptest! {
    #[test]
    fn rationals_stay_in_lowest_terms(n in -1000i64..1000, d in prop_oneof![-1000i64..-1, 1i64..1000]) {
        let q = rational_normalize(Integer::from(n), Integer::from(d)).unwrap();
        prop_assert!(*q.denom() > Integer::zero());
        prop_assert_eq!(num_integer::Integer::gcd(q.numer(), q.denom()), if n == 0 { q.denom().clone() } else { Integer::from(1) });
        prop_assert_eq!(q * Rational::from_integer(Integer::from(d)), rat(n, 1));
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn evaluation_is_additive_and_multiplicative(p in polynomial(), q in polynomial(), x in rational()) {
        prop_assert_eq!(poly_eval(&(&p + &q), &x), poly_eval(&p, &x) + poly_eval(&q, &x));
        prop_assert_eq!(poly_eval(&(&p * &q), &x), poly_eval(&p, &x) * poly_eval(&q, &x));
        let sum = &p + &q;
        prop_assert!(sum.coeffs().last().map_or(true, |c| !c.is_zero()));
    }

    #[test]
    fn pi_powers_multiply_by_adding_exponents(a in rational(), b in rational(), ea in 0u32..6, eb in 0u32..6) {
        let x = PiPowerValue::new(a.clone(), ea);
        let y = PiPowerValue::new(b.clone(), eb);
        let prod = &x * &y;
        prop_assert_eq!(prod.half_exponent, ea + eb);
        prop_assert_eq!(prod.coeff, &a * &b);
        prop_assert_eq!(x.checked_add(&y).is_ok(), ea == eb);
    }

    #[test]
    fn generalized_lang_matches_direct(xs in sequence(), k in 1usize..9) {
        let direct = power_sums_direct(&xs, k);
        prop_assert_eq!(power_sum_via_lang(&xs, k).unwrap(), direct[k - 1].clone());
        let sigma = elementary_prefix(&xs, k);
        prop_assert_eq!(newton_girard_power_sums(&sigma, k).unwrap(), direct);
    }

    #[test]
    fn orthogonality_holds(xs in sequence(), k in 0usize..12) {
        let expected = if k == 0 { rat(1, 1) } else { rat(0, 1) };
        prop_assert_eq!(orthogonality_residual(&xs, k), expected);
    }

    #[test]
    fn elementary_vanishes_past_length(xs in sequence()) {
        let sigma = elementary_prefix(&xs, xs.len() + 3);
        prop_assert!(sigma[xs.len() + 1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn formulas_agree_with_brute(k in 1u32..15, n in 1u32..30) {
        let brute = s_brute(&PowerSumQuery::prefix(k, n).unwrap());
        prop_assert_eq!(s_lang_original(k, n).unwrap(), brute.clone());
        prop_assert_eq!(s_lang_refined(k, n).unwrap(), brute.clone());
        prop_assert_eq!(s_newton_recurrence(k, n).unwrap(), brute);
    }

    #[test]
    fn range_telescopes(k in 1u32..9, n in 1u32..15, r_offset in 0u32..15) {
        let r = 1 + r_offset % n;
        let upper = s_brute(&PowerSumQuery::prefix(k, n).unwrap());
        let lower = if r == 1 { Integer::zero() } else { s_brute(&PowerSumQuery::prefix(k, r - 1).unwrap()) };
        prop_assert_eq!(s_range(k, n, r).unwrap(), upper - lower);
    }
}
