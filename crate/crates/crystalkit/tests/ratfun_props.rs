//! Property tests for exact Laurent polynomials and rational functions.
//!
//! The oracle is evaluation at a handful of rational points, computed here
//! from the raw coefficient lists.

use crystalkit::ratfun::{qbinom, qfactorial, qint, rat, LaurentPoly, RatFun, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn eval_laurent(p: &LaurentPoly, q: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        let base = if e >= 0 { q.clone() } else { q.recip() };
        for _ in 0..e.unsigned_abs() {
            t *= &base;
        }
        acc += t;
    }
    acc
}

fn eval(x: &RatFun, q: &Rational) -> Option<Rational> {
    let d = eval_laurent(x.denominator(), q);
    (!d.is_zero()).then(|| eval_laurent(x.numerator(), q) / d)
}

fn points() -> Vec<Rational> {
    [(2, 1), (3, 1), (-1, 2), (5, 3), (-7, 4)]
        .into_iter()
        .map(|(a, b)| Rational::new(a.into(), b.into()))
        .collect()
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (laurent(), nonzero_laurent())
        .prop_map(|(n, d)| RatFun::new(n, d).expect("nonzero denominator"))
}

/// Asserts `lhs == rhs` at every point where both are defined.
fn agree_at_points(
    lhs: impl Fn(&Rational) -> Option<Rational>,
    rhs: impl Fn(&Rational) -> Option<Rational>,
) {
    for q in points() {
        if let (Some(a), Some(b)) = (lhs(&q), rhs(&q)) {
            assert_eq!(a, b, "disagree at q = {q}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn bar_is_an_involution(x in ratfun()) {
        prop_assert_eq!(x.bar().bar(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_operations_match_evaluation(x in ratfun(), y in ratfun()) {
        agree_at_points(|q| Some(eval(&x, q)? + eval(&y, q)?), |q| eval(&(&x + &y), q));
        agree_at_points(|q| Some(eval(&x, q)? * eval(&y, q)?), |q| eval(&(&x * &y), q));
        agree_at_points(|q| Some(eval(&x, q)? - eval(&y, q)?), |q| eval(&(&x - &y), q));
        if !y.is_zero() {
            let z = x.div(&y).unwrap();
            agree_at_points(
                |q| {
                    let b = eval(&y, q)?;
                    (!b.is_zero()).then(|| eval(&x, q).map(|a| a / b)).flatten()
                },
                |q| eval(&z, q),
            );
        }
    }

    #[test]
    fn bar_inverts_the_variable(x in ratfun()) {
        agree_at_points(|q| eval(&x, &q.recip()), |q| eval(&x.bar(), q));
    }

    #[test]
    fn negate_q_substitutes(x in ratfun()) {
        agree_at_points(|q| eval(&x, &-q.clone()), |q| eval(&x.negate_q(), q));
    }

    #[test]
    fn valuation_is_additive(x in ratfun(), y in ratfun()) {
        if let (Some(a), Some(b)) = (x.valuation(), y.valuation()) {
            prop_assert_eq!((&x * &y).valuation(), Some(a + b));
        }
    }

    #[test]
    fn valuation_of_sum(x in ratfun(), y in ratfun()) {
        let s = &x + &y;
        if let (Some(a), Some(b), Some(c)) = (x.valuation(), y.valuation(), s.valuation()) {
            prop_assert!(c >= a.min(b));
        }
    }

    #[test]
    fn canonical_forms_are_unique(x in ratfun(), k in nonzero_laurent()) {
        // Multiplying numerator and denominator by the same factor gives
        // the same stored representation.
        let y = RatFun::new(x.numerator() * &k, x.denominator() * &k).unwrap();
        prop_assert_eq!(&y, &x);
        prop_assert!((&x - &y).is_zero());
        prop_assert_eq!(x.to_string(), y.to_string());
    }

    #[test]
    fn text_round_trip(x in ratfun()) {
        let back: RatFun = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }
}

#[test]
fn binomial_factorial_identity() {
    for n in 0..=8u32 {
        for k in 0..=n {
            let lhs = &(&qbinom(i64::from(n), k) * &qfactorial(k)) * &qfactorial(n - k);
            assert_eq!(lhs, qfactorial(n), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn quantum_integers_at_one_are_integers() {
    for n in -6..=6 {
        assert_eq!(qint(n).eval_one(), rat(n));
    }
    assert_eq!(qbinom(6, 3).eval_one(), rat(20));
    assert!(RatFun::one().is_one());
    assert_eq!(
        eval(&RatFun::one(), &Rational::one()),
        Some(Rational::one())
    );
}
