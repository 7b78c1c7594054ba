//! Property suites for the scalar fields and the divided-series algebra.

use num_traits::{One, Zero};
use proptest::prelude::*;

use qfe_core::qcore::Poly;
use qfe_core::scalars::{Field, MPoly, Mono, RatFunc, Rational};
use qfe_core::umbral::DividedSeries;
use qfe_core::{random, QContext};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn arb_mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..=2, 0u32..=2, -9i64..=9, 1i64..=9), 0..=4).prop_map(|terms| {
        MPoly::from_terms(
            terms
                .into_iter()
                .map(|(dq, dl, n, d)| (Mono { dq, dl }, Rational::ratio(n, d))),
        )
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        arb_mpoly(),
        arb_mpoly().prop_filter("nonzero denominator", |p| !p.is_zero()),
    )
        .prop_map(|(num, den)| RatFunc::new(num, den).expect("nonzero denominator"))
}

/// The canonical-form invariants of a rational function: reduced, monic
/// denominator.
fn assert_canonical(f: &RatFunc) {
    assert_eq!(
        f.den().leading_coeff().cloned(),
        Some(Rational::from_integer(1)),
        "denominator not monic: {f}"
    );
    if !f.is_zero() {
        let g = MPoly::gcd(f.num(), f.den());
        assert!(g.is_constant(), "not reduced: {f} (gcd {g})");
    } else {
        assert!(f.den().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms_numeric(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        prop_assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        prop_assert!((a.clone() + (-a.clone())).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.inv().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms_symbolic(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        let ab = a.clone() + b.clone();
        prop_assert_eq!(ab.clone(), b.clone() + a.clone());
        assert_canonical(&ab);
        let prod = a.clone() * b.clone();
        prop_assert_eq!(prod.clone(), b.clone() * a.clone());
        assert_canonical(&prod);
        prop_assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        prop_assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        prop_assert!((a.clone() + (-a.clone())).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            assert_canonical(&inv);
            prop_assert!((a.clone() * inv).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonicalization_idempotent(f in arb_ratfunc()) {
        assert_canonical(&f);
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn subtraction_detects_equality(a in arb_ratfunc(), b in arb_ratfunc()) {
        // structural equality of canonical forms agrees with algebraic zero
        let equal = a == b;
        let diff = a.clone() - b.clone();
        prop_assert_eq!(equal, diff.is_zero());
        // and a value rebuilt by arithmetic detours is structurally equal
        let detour = (a.clone() + b.clone()) - b.clone();
        prop_assert_eq!(detour, a);
    }
}

#[test]
fn schwartz_zippel_consistency() {
    // eq(a, b) iff (a - b) evaluates to 0 at 20 random non-pole points
    let mut rng = random::rng(2024, 77);
    let mut disagreements = 0usize;
    for case in 0..60 {
        let a = random::ratfunc(&mut rng, 2, 4);
        let b = if case % 3 == 0 {
            // same value through an arithmetic detour
            let c = random::ratfunc(&mut rng, 2, 3);
            (a.clone() + c.clone()) - c
        } else {
            random::ratfunc(&mut rng, 2, 4)
        };
        let diff = a.clone() - b.clone();
        let mut all_zero = true;
        let mut points = 0;
        while points < 20 {
            let q0 = random::rational(&mut rng);
            let l0 = random::rational(&mut rng);
            match diff.evaluate(&q0, &l0) {
                Ok(v) => {
                    points += 1;
                    if !v.is_zero() {
                        all_zero = false;
                    }
                }
                Err(_) => continue, // pole: resample
            }
        }
        if (a == b) != all_zero {
            disagreements += 1;
        }
    }
    assert_eq!(disagreements, 0);
}

#[test]
fn series_mul_commutative_associative() {
    let ctx = QContext::numeric(Rational::ratio(3, 5), Rational::ratio(-1, 2)).unwrap();
    let mut rng = random::rng(8, 3);
    for _ in 0..40 {
        let order = 12;
        let f = random_series(&mut rng, order);
        let g = random_series(&mut rng, order);
        let h = random_series(&mut rng, order);
        assert_eq!(f.mul(&ctx, &g), g.mul(&ctx, &f));
        assert_eq!(
            f.mul(&ctx, &g).mul(&ctx, &h),
            f.mul(&ctx, &g.mul(&ctx, &h))
        );
    }
    // a symbolic spot check
    let sym = QContext::symbolic();
    let f = DividedSeries::from_divided_coeffs(vec![
        RatFunc::one(),
        RatFunc::var_q(),
        RatFunc::var_lambda(),
    ]);
    let g = DividedSeries::from_divided_coeffs(vec![
        RatFunc::var_lambda(),
        RatFunc::from_int(2),
        RatFunc::var_q(),
    ]);
    assert_eq!(f.mul(&sym, &g), g.mul(&sym, &f));
}

fn random_series(
    rng: &mut rand_chacha::ChaCha8Rng,
    order: usize,
) -> DividedSeries<Rational> {
    DividedSeries::from_divided_coeffs((0..=order).map(|_| random::rational(rng)).collect())
}

#[test]
fn series_inverse_is_two_sided() {
    let ctx = QContext::numeric(Rational::ratio(2, 7), Rational::ratio(4, 3)).unwrap();
    let mut rng = random::rng(9, 12);
    let mut checked = 0;
    while checked < 50 {
        let mut f = random_series(&mut rng, 10);
        if f.coeff(0).is_zero() {
            continue;
        }
        let inv = f.inverse(&ctx).unwrap();
        assert_eq!(f.mul(&ctx, &inv), DividedSeries::one(10));
        assert_eq!(inv.mul(&ctx, &f), DividedSeries::one(10));
        checked += 1;
        f = f.scale(&Rational::from_integer(1));
        let _ = f;
    }
}

#[test]
fn functional_of_product_is_qbinomial_convolution() {
    let ctx = QContext::numeric(Rational::ratio(5, 9), Rational::ratio(1, 3)).unwrap();
    let mut rng = random::rng(10, 5);
    for _ in 0..25 {
        let f = random_series(&mut rng, 9);
        let g = random_series(&mut rng, 9);
        let fg = f.mul(&ctx, &g);
        for n in 0..=9usize {
            let lhs = fg
                .apply_functional(&Poly::<Rational>::x_pow(n as u32))
                .unwrap();
            let mut rhs = Rational::zero();
            for k in 0..=n {
                rhs = rhs
                    + ctx.q_binomial(n as u32, k as i64) * f.coeff(k) * g.coeff(n - k);
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn functional_linearity() {
    let ctx = QContext::numeric(Rational::ratio(-2, 5), Rational::ratio(7, 2)).unwrap();
    let mut rng = random::rng(14, 6);
    for _ in 0..25 {
        let f = random_series(&mut rng, 8);
        let g = random_series(&mut rng, 8);
        let p: Poly<Rational> = random::poly(&mut rng, 6);
        let r: Poly<Rational> = random::poly(&mut rng, 8);
        let alpha = random::rational(&mut rng);
        let beta = random::rational(&mut rng);
        // linear in the series argument
        let lhs = f
            .scale(&alpha)
            .add(&g.scale(&beta))
            .apply_functional(&p)
            .unwrap();
        let rhs = alpha.clone() * f.apply_functional(&p).unwrap()
            + beta.clone() * g.apply_functional(&p).unwrap();
        assert_eq!(lhs, rhs);
        // linear in the polynomial argument
        let combo = p.scale(&alpha).add(&r.scale(&beta));
        let lhs = f.apply_functional(&combo).unwrap();
        let rhs =
            alpha * f.apply_functional(&p).unwrap() + beta * f.apply_functional(&r).unwrap();
        assert_eq!(lhs, rhs);
    }
}
