//! Generators for the polynomial families: q-Bernoulli, q-Euler,
//! q-Frobenius-Euler, and the order-r extensions of both ends.
//!
//! Every number table is produced by triangular inversion of the family's
//! generating kernel in the divided-series algebra; the classical
//! recurrences and convolution formulas are provided as independent second
//! routes and double as cross-checks in the identity suite.

use serde::{Deserialize, Serialize};

use crate::qcore::{Poly, QContext};
use crate::scalars::Field;
use crate::umbral::DividedSeries;

/// Which polynomial family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "bernoulli")]
    QBernoulli,
    #[serde(rename = "euler")]
    QEuler,
    #[serde(rename = "frobenius")]
    QFrobeniusEuler,
    #[serde(rename = "frobenius-r")]
    QFrobeniusEulerOrderR,
    #[serde(rename = "bernoulli-r")]
    QBernoulliOrderR,
}

impl FamilyKind {
    pub fn is_order_r(self) -> bool {
        matches!(
            self,
            FamilyKind::QFrobeniusEulerOrderR | FamilyKind::QBernoulliOrderR
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::QBernoulli => "bernoulli",
            FamilyKind::QEuler => "euler",
            FamilyKind::QFrobeniusEuler => "frobenius",
            FamilyKind::QFrobeniusEulerOrderR => "frobenius-r",
            FamilyKind::QBernoulliOrderR => "bernoulli-r",
        }
    }
}

/// A family together with its order parameter (`r >= 1`, only for the
/// order-r kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyId {
    pub family: FamilyKind,
    pub r: Option<u32>,
}

impl FamilyId {
    pub fn plain(kind: FamilyKind) -> Self {
        assert!(!kind.is_order_r(), "order-r family needs r");
        FamilyId {
            family: kind,
            r: None,
        }
    }

    pub fn order_r(kind: FamilyKind, r: u32) -> Self {
        assert!(kind.is_order_r(), "plain family takes no r");
        assert!(r >= 1, "order must be at least 1");
        FamilyId {
            family: kind,
            r: Some(r),
        }
    }

    pub fn bernoulli() -> Self {
        Self::plain(FamilyKind::QBernoulli)
    }

    pub fn euler() -> Self {
        Self::plain(FamilyKind::QEuler)
    }

    pub fn frobenius() -> Self {
        Self::plain(FamilyKind::QFrobeniusEuler)
    }

    pub fn frobenius_r(r: u32) -> Self {
        Self::order_r(FamilyKind::QFrobeniusEulerOrderR, r)
    }

    pub fn bernoulli_r(r: u32) -> Self {
        Self::order_r(FamilyKind::QBernoulliOrderR, r)
    }
}

/// The numbers `v_0..v_N` of a family (`v_n` is the value of the degree-n
/// polynomial at x = 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumberTable<K> {
    #[serde(flatten)]
    pub family: FamilyId,
    pub values: Vec<K>,
}

impl<K: Field> NumberTable<K> {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &K {
        &self.values[n]
    }
}

/// Divided coefficients of the Frobenius-Euler kernel
/// `(e_q(t) - lambda) / (1 - lambda)`: `a_0 = 1`, `a_k = 1/(1-lambda)`.
pub fn frobenius_kernel<K: Field>(ctx: &QContext<K>, order: usize) -> DividedSeries<K> {
    let inv = (K::one() - ctx.lambda().clone())
        .inv()
        .expect("lambda != 1 under the field configuration");
    let mut coeffs = vec![inv; order + 1];
    coeffs[0] = K::one();
    DividedSeries::from_divided_coeffs(coeffs)
}

/// Divided coefficients of `(e_q(t) - 1)/t`: `a_k = 1/[k+1]_q`. Its inverse
/// generates the q-Bernoulli numbers.
pub fn bernoulli_kernel<K: Field>(ctx: &QContext<K>, order: usize) -> DividedSeries<K> {
    let coeffs = (0..=order)
        .map(|k| {
            ctx.q_int(k as u32 + 1)
                .inv()
                .expect("[k+1]_q invertible under the field configuration")
        })
        .collect();
    DividedSeries::from_divided_coeffs(coeffs)
}

/// Divided coefficients of `(e_q(t) + 1)/2`: `a_0 = 1`, `a_k = 1/2`. Its
/// inverse generates the q-Euler numbers.
pub fn euler_kernel<K: Field>(_ctx: &QContext<K>, order: usize) -> DividedSeries<K> {
    let half = K::from_rational(crate::scalars::Rational::ratio(1, 2));
    let mut coeffs = vec![half; order + 1];
    coeffs[0] = K::one();
    DividedSeries::from_divided_coeffs(coeffs)
}

/// q-Frobenius-Euler numbers `H_{n,q}(lambda)` for `n = 0..=n_max`, by
/// triangular inversion of the kernel.
pub fn frobenius_euler_numbers<K: Field>(ctx: &QContext<K>, n_max: usize) -> NumberTable<K> {
    let series = frobenius_kernel(ctx, n_max)
        .inverse(ctx)
        .expect("kernel has constant coefficient 1");
    NumberTable {
        family: FamilyId::frobenius(),
        values: series.coeffs().to_vec(),
    }
}

/// The same numbers by the backward recurrence
/// `H_n = (1/(lambda-1)) sum_{l<n} [n choose l]_q H_l`, an independent route.
pub fn frobenius_euler_numbers_by_recurrence<K: Field>(
    ctx: &QContext<K>,
    n_max: usize,
) -> NumberTable<K> {
    let lam_minus_one_inv = (ctx.lambda().clone() - K::one())
        .inv()
        .expect("lambda != 1 under the field configuration");
    let mut values: Vec<K> = Vec::with_capacity(n_max + 1);
    values.push(K::one());
    for n in 1..=n_max {
        let mut acc = K::zero();
        for (l, h) in values.iter().enumerate() {
            acc = acc + ctx.q_binomial(n as u32, l as i64) * h.clone();
        }
        values.push(lam_minus_one_inv.clone() * acc);
    }
    NumberTable {
        family: FamilyId::frobenius(),
        values,
    }
}

/// Appell-style polynomial builder shared by every family here: the degree-n
/// polynomial has coefficient `[n choose l]_q * v_{n-l}` on `x^l`.
pub fn poly_from_numbers<K: Field>(ctx: &QContext<K>, values: &[K], n: usize) -> Poly<K> {
    assert!(values.len() > n, "table too short for degree {n}");
    let coeffs = (0..=n)
        .map(|l| ctx.q_binomial(n as u32, l as i64) * values[n - l].clone())
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `H_{n,q}(x | lambda)`, monic of degree n.
pub fn frobenius_euler_poly<K: Field>(ctx: &QContext<K>, n: usize) -> Poly<K> {
    let table = frobenius_euler_numbers(ctx, n);
    poly_from_numbers(ctx, &table.values, n)
}

/// Order-r q-Frobenius-Euler numbers via the r-th power of the inverted
/// kernel.
pub fn frobenius_euler_numbers_order_r<K: Field>(
    ctx: &QContext<K>,
    n_max: usize,
    r: u32,
) -> NumberTable<K> {
    assert!(r >= 1, "order must be at least 1");
    let series = frobenius_kernel(ctx, n_max)
        .inverse(ctx)
        .expect("kernel has constant coefficient 1")
        .pow(ctx, r);
    NumberTable {
        family: FamilyId::frobenius_r(r),
        values: series.coeffs().to_vec(),
    }
}

/// Enumerates the weak compositions of `n` into exactly `parts` nonnegative
/// parts, in colexicographic order.
pub fn weak_compositions(n: u32, parts: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, parts: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            let mut c = acc.clone();
            c.push(n);
            out.push(c);
            return;
        }
        for first in 0..=n {
            acc.push(first);
            rec(n - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(n, parts, &mut Vec::new(), &mut out);
    out
}

/// Order-r numbers by the q-multinomial convolution of order-1 numbers, the
/// independent second route.
pub fn frobenius_euler_numbers_order_r_by_convolution<K: Field>(
    ctx: &QContext<K>,
    n_max: usize,
    r: u32,
) -> NumberTable<K> {
    assert!(r >= 1, "order must be at least 1");
    let base = frobenius_euler_numbers(ctx, n_max);
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = K::zero();
        for comp in weak_compositions(n as u32, r) {
            let w = ctx
                .q_multinomial(n as u32, &comp)
                .expect("composition parts sum to n");
            let mut prod = w;
            for &i in &comp {
                prod = prod * base.values[i as usize].clone();
            }
            acc = acc + prod;
        }
        values.push(acc);
    }
    NumberTable {
        family: FamilyId::frobenius_r(r),
        values,
    }
}

/// `H^{(r)}_{n,q}(x | lambda)`, monic of degree n.
pub fn frobenius_euler_poly_order_r<K: Field>(ctx: &QContext<K>, n: usize, r: u32) -> Poly<K> {
    let table = frobenius_euler_numbers_order_r(ctx, n, r);
    poly_from_numbers(ctx, &table.values, n)
}

/// q-Bernoulli numbers `B_{n,q}` (inverse of the `(e_q(t)-1)/t` kernel).
pub fn q_bernoulli_numbers<K: Field>(ctx: &QContext<K>, n_max: usize) -> NumberTable<K> {
    let series = bernoulli_kernel(ctx, n_max)
        .inverse(ctx)
        .expect("kernel has constant coefficient 1");
    NumberTable {
        family: FamilyId::bernoulli(),
        values: series.coeffs().to_vec(),
    }
}

/// `B_{n,q}(x)`.
pub fn q_bernoulli_poly<K: Field>(ctx: &QContext<K>, n: usize) -> Poly<K> {
    let table = q_bernoulli_numbers(ctx, n);
    poly_from_numbers(ctx, &table.values, n)
}

/// q-Euler numbers `E_{n,q}` (inverse of the `(e_q(t)+1)/2` kernel).
pub fn q_euler_numbers<K: Field>(ctx: &QContext<K>, n_max: usize) -> NumberTable<K> {
    let series = euler_kernel(ctx, n_max)
        .inverse(ctx)
        .expect("kernel has constant coefficient 1");
    NumberTable {
        family: FamilyId::euler(),
        values: series.coeffs().to_vec(),
    }
}

/// `E_{n,q}(x)`.
pub fn q_euler_poly<K: Field>(ctx: &QContext<K>, n: usize) -> Poly<K> {
    let table = q_euler_numbers(ctx, n);
    poly_from_numbers(ctx, &table.values, n)
}

/// Order-r q-Bernoulli numbers: the generating kernel is taken to be the
/// r-th power of the order-1 kernel, so the numbers are the divided
/// coefficients of the r-th power of the B-series.
pub fn q_bernoulli_numbers_order_r<K: Field>(
    ctx: &QContext<K>,
    n_max: usize,
    r: u32,
) -> NumberTable<K> {
    assert!(r >= 1, "order must be at least 1");
    let series = bernoulli_kernel(ctx, n_max)
        .inverse(ctx)
        .expect("kernel has constant coefficient 1")
        .pow(ctx, r);
    NumberTable {
        family: FamilyId::bernoulli_r(r),
        values: series.coeffs().to_vec(),
    }
}

/// `B^{(r)}_{n,q}(x)` under the same order-r kernel convention.
pub fn q_bernoulli_poly_order_r<K: Field>(ctx: &QContext<K>, n: usize, r: u32) -> Poly<K> {
    let table = q_bernoulli_numbers_order_r(ctx, n, r);
    poly_from_numbers(ctx, &table.values, n)
}

/// Number table for any family id.
pub fn family_numbers<K: Field>(ctx: &QContext<K>, id: FamilyId, n_max: usize) -> NumberTable<K> {
    match id.family {
        FamilyKind::QBernoulli => q_bernoulli_numbers(ctx, n_max),
        FamilyKind::QEuler => q_euler_numbers(ctx, n_max),
        FamilyKind::QFrobeniusEuler => frobenius_euler_numbers(ctx, n_max),
        FamilyKind::QFrobeniusEulerOrderR => {
            frobenius_euler_numbers_order_r(ctx, n_max, id.r.expect("order-r family"))
        }
        FamilyKind::QBernoulliOrderR => {
            q_bernoulli_numbers_order_r(ctx, n_max, id.r.expect("order-r family"))
        }
    }
}

/// All family polynomials of degree `0..=n_max`, sharing one number table.
pub fn family_polys<K: Field>(ctx: &QContext<K>, id: FamilyId, n_max: usize) -> Vec<Poly<K>> {
    let table = family_numbers(ctx, id, n_max);
    (0..=n_max)
        .map(|n| poly_from_numbers(ctx, &table.values, n))
        .collect()
}

/// The degree-n polynomial of any family id.
pub fn family_poly<K: Field>(ctx: &QContext<K>, id: FamilyId, n: usize) -> Poly<K> {
    let table = family_numbers(ctx, id, n);
    poly_from_numbers(ctx, &table.values, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Rational};
    use num_traits::{One, Zero};

    fn sym() -> QContext<RatFunc> {
        QContext::symbolic()
    }

    fn one_minus_lambda_inv() -> RatFunc {
        (RatFunc::one() - RatFunc::var_lambda()).inv().unwrap()
    }

    #[test]
    fn kernel_divided_coefficients() {
        let ctx = sym();
        let k = frobenius_kernel(&ctx, 3);
        assert!(k.coeff(0).is_one());
        assert_eq!(k.coeff(1), one_minus_lambda_inv());
        assert_eq!(k.coeff(2), one_minus_lambda_inv());
        // at lambda = -1 the kernel matches the q-Euler kernel (e_q(t)+1)/2
        let ctx_e = QContext::with_scalars(RatFunc::var_q(), RatFunc::from_int(-1));
        let ke = frobenius_kernel(&ctx_e, 3);
        assert_eq!(
            ke.coeff(2),
            RatFunc::from_rational(Rational::ratio(1, 2))
        );
    }

    #[test]
    fn frobenius_numbers_low_orders() {
        let ctx = sym();
        let h = frobenius_euler_numbers(&ctx, 2);
        assert!(h.values[0].is_one());
        assert_eq!(h.values[1], -one_minus_lambda_inv());
        // H_2 = (lambda + q)/(1 - lambda)^2
        let expected = (RatFunc::var_lambda() + RatFunc::var_q())
            * (RatFunc::one() - RatFunc::var_lambda()).pow_u(2).inv().unwrap();
        assert_eq!(h.values[2], expected);
    }

    #[test]
    fn recurrence_matches_inversion() {
        let ctx = sym();
        let a = frobenius_euler_numbers(&ctx, 12);
        let b = frobenius_euler_numbers_by_recurrence(&ctx, 12);
        assert_eq!(a.values, b.values);
        // spot checks of the recurrence values themselves
        assert_eq!(b.values[1], -one_minus_lambda_inv());
        let expected = (RatFunc::var_lambda() + RatFunc::var_q())
            * (RatFunc::one() - RatFunc::var_lambda()).pow_u(2).inv().unwrap();
        assert_eq!(b.values[2], expected);
    }

    #[test]
    fn recurrence_matches_inversion_numeric_deep() {
        let ctx = QContext::numeric(Rational::ratio(2, 5), Rational::ratio(-3, 4)).unwrap();
        let a = frobenius_euler_numbers(&ctx, 25);
        let b = frobenius_euler_numbers_by_recurrence(&ctx, 25);
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn frobenius_polys_low_orders() {
        let ctx = sym();
        assert_eq!(frobenius_euler_poly(&ctx, 0), Poly::one());
        // H_1(x|lambda) = x - 1/(1-lambda)
        let p1 = frobenius_euler_poly(&ctx, 1);
        assert_eq!(p1.coeff(1), RatFunc::one());
        assert_eq!(p1.coeff(0), -one_minus_lambda_inv());
        // H_2 = x^2 + (1+q)(-1/(1-lambda)) x + (lambda+q)/(1-lambda)^2
        let p2 = frobenius_euler_poly(&ctx, 2);
        assert_eq!(p2.coeff(2), RatFunc::one());
        assert_eq!(p2.coeff(1), ctx.q_int(2) * -one_minus_lambda_inv());
        let h2 = (RatFunc::var_lambda() + RatFunc::var_q())
            * (RatFunc::one() - RatFunc::var_lambda()).pow_u(2).inv().unwrap();
        assert_eq!(p2.coeff(0), h2);
        // monic across degrees
        for n in 0..=8usize {
            assert!(frobenius_euler_poly(&ctx, n).leading_coeff().unwrap().is_one());
        }
    }

    #[test]
    fn order_r_reduction_and_values() {
        let ctx = sym();
        let r1 = frobenius_euler_numbers_order_r(&ctx, 10, 1);
        let base = frobenius_euler_numbers(&ctx, 10);
        assert_eq!(r1.values, base.values);
        let r2 = frobenius_euler_numbers_order_r(&ctx, 4, 2);
        assert!(r2.values[0].is_one());
        // H^{(2)}_1 = -2/(1-lambda)
        assert_eq!(
            r2.values[1],
            RatFunc::from_int(-2) * one_minus_lambda_inv()
        );
        // H^{(2)}_2 = (2(lambda+q) + (1+q))/(1-lambda)^2
        let expected = (RatFunc::from_int(2) * (RatFunc::var_lambda() + RatFunc::var_q())
            + ctx.q_int(2))
            * (RatFunc::one() - RatFunc::var_lambda()).pow_u(2).inv().unwrap();
        assert_eq!(r2.values[2], expected);
    }

    #[test]
    fn convolution_route_matches_series_power() {
        let ctx = sym();
        for r in 1..=3u32 {
            let a = frobenius_euler_numbers_order_r(&ctx, 6, r);
            let b = frobenius_euler_numbers_order_r_by_convolution(&ctx, 6, r);
            assert_eq!(a.values, b.values, "r={r}");
        }
        let ctx_n = QContext::numeric(Rational::ratio(3, 7), Rational::ratio(5, 2)).unwrap();
        for r in 1..=4u32 {
            let a = frobenius_euler_numbers_order_r(&ctx_n, 10, r);
            let b = frobenius_euler_numbers_order_r_by_convolution(&ctx_n, 10, r);
            assert_eq!(a.values, b.values, "numeric r={r}");
        }
    }

    #[test]
    fn weak_composition_enumeration() {
        assert_eq!(weak_compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(weak_compositions(2, 0).is_empty());
        assert_eq!(weak_compositions(1, 2), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(weak_compositions(2, 2).len(), 3);
        assert_eq!(weak_compositions(10, 4).len(), 286);
    }

    #[test]
    fn bernoulli_numbers_low_orders() {
        let ctx = sym();
        let b = q_bernoulli_numbers(&ctx, 2);
        assert!(b.values[0].is_one());
        // B_1 = -1/[2]_q
        assert_eq!(b.values[1], -ctx.q_int(2).inv().unwrap());
        // q -> 1 limit of B_2 is the classical 1/6
        assert_eq!(
            b.values[2]
                .evaluate(&Rational::from_integer(1), &Rational::from_integer(0))
                .unwrap(),
            Rational::ratio(1, 6)
        );
    }

    #[test]
    fn euler_numbers_low_orders_and_lambda_minus_one() {
        let ctx = sym();
        let e = q_euler_numbers(&ctx, 10);
        assert!(e.values[0].is_one());
        assert_eq!(e.values[1], RatFunc::from_rational(Rational::ratio(-1, 2)));
        // E_{n,q} = H_{n,q}(lambda = -1)
        let ctx_h = QContext::with_scalars(RatFunc::var_q(), RatFunc::from_int(-1));
        let h = frobenius_euler_numbers(&ctx_h, 10);
        assert_eq!(e.values, h.values);
    }

    #[test]
    fn bernoulli_order_r() {
        let ctx = sym();
        let r1 = q_bernoulli_numbers_order_r(&ctx, 6, 1);
        assert_eq!(r1.values, q_bernoulli_numbers(&ctx, 6).values);
        let r2 = q_bernoulli_numbers_order_r(&ctx, 3, 2);
        assert!(r2.values[0].is_one());
        // B^{(2)}_1 = 2 B_1 = -2/(1+q)
        assert_eq!(
            r2.values[1],
            RatFunc::from_int(-2) * ctx.q_int(2).inv().unwrap()
        );
    }

    #[test]
    fn value_relations_at_one() {
        let ctx = sym();
        // B_n(1) - B_n = delta_{n,1} and E_n(1) + E_n = 2 delta_{n,0}
        let bt = q_bernoulli_numbers(&ctx, 12);
        let et = q_euler_numbers(&ctx, 12);
        for n in 0..=12usize {
            let bp = poly_from_numbers(&ctx, &bt.values, n);
            let lhs = bp.eval(&RatFunc::one()) - bt.values[n].clone();
            let expect = if n == 1 { RatFunc::one() } else { RatFunc::zero() };
            assert_eq!(lhs, expect, "bernoulli n={n}");
            let ep = poly_from_numbers(&ctx, &et.values, n);
            let lhs = ep.eval(&RatFunc::one()) + et.values[n].clone();
            let expect = if n == 0 { RatFunc::from_int(2) } else { RatFunc::zero() };
            assert_eq!(lhs, expect, "euler n={n}");
        }
    }

    #[test]
    fn theorem_value_relation_at_one_frobenius() {
        let ctx = sym();
        // H_n(1|lambda) - lambda H_n(lambda) = (1-lambda) delta_{0,n}
        let table = frobenius_euler_numbers(&ctx, 12);
        for n in 0..=12usize {
            let p = poly_from_numbers(&ctx, &table.values, n);
            let lhs = p.eval(&RatFunc::one())
                - RatFunc::var_lambda() * table.values[n].clone();
            let expect = if n == 0 {
                RatFunc::one() - RatFunc::var_lambda()
            } else {
                RatFunc::zero()
            };
            assert_eq!(lhs, expect, "n={n}");
        }
    }

    #[test]
    fn order_reduction_relation() {
        let ctx = sym();
        // H^{(r)}_n(1|lambda) - lambda H^{(r)}_n(lambda) = (1-lambda) H^{(r-1)}_n(lambda)
        for r in 1..=4u32 {
            let table = frobenius_euler_numbers_order_r(&ctx, 8, r);
            let prev: Vec<RatFunc> = if r == 1 {
                let mut v = vec![RatFunc::zero(); 9];
                v[0] = RatFunc::one();
                v
            } else {
                frobenius_euler_numbers_order_r(&ctx, 8, r - 1).values
            };
            for n in 0..=8usize {
                let p = poly_from_numbers(&ctx, &table.values, n);
                let lhs = p.eval(&RatFunc::one())
                    - RatFunc::var_lambda() * table.values[n].clone();
                let rhs = (RatFunc::one() - RatFunc::var_lambda()) * prev[n].clone();
                assert_eq!(lhs, rhs, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn operator_route_matches_poly_and_t_action() {
        let ctx = sym();
        let kernel_inv = frobenius_kernel(&ctx, 8).inverse(&ctx).unwrap();
        for n in 0..=6usize {
            // applying the inverted kernel to x^n produces H_n(x|lambda)
            let acted = kernel_inv
                .apply_operator(&ctx, &Poly::x_pow(n as u32))
                .unwrap();
            assert_eq!(acted, frobenius_euler_poly(&ctx, n), "n={n}");
        }
        // D_q H_n = [n]_q H_{n-1}
        for n in 1..=6usize {
            let d = frobenius_euler_poly(&ctx, n).q_derivative(&ctx);
            let expect = frobenius_euler_poly(&ctx, n - 1).scale(&ctx.q_int(n as u32));
            assert_eq!(d, expect, "n={n}");
        }
    }

    #[test]
    fn family_id_serde() {
        let id = FamilyId::frobenius_r(2);
        let s = serde_json::to_string(&id).unwrap();
        assert_eq!(s, r#"{"family":"frobenius-r","r":2}"#);
        let table = NumberTable::<RatFunc> {
            family: FamilyId::frobenius(),
            values: vec![RatFunc::one()],
        };
        let s = serde_json::to_string(&table).unwrap();
        assert_eq!(
            s,
            r#"{"family":"frobenius","r":null,"values":[{"num":[["1",0,0]],"den":[["1",0,0]]}]}"#
        );
    }
}
