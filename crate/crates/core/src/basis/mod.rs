//! Basis conversion into the Frobenius-Euler bases, reconstruction, and the
//! identity verification suite.
//!
//! Three expansion routes are implemented. The order-1 route reads the
//! coefficients off q-derivative values at 0 and 1; the order-r route applies
//! the kernel-power functional; the multinomial route evaluates the closed
//! triple-sum formula. The pairs of routes are kept independent on purpose:
//! their exact agreement on random inputs is one of the strongest checks in
//! the suite.

pub mod identity;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{self, FamilyId};
use crate::qcore::{Poly, QContext};
use crate::scalars::Field;
use crate::umbral::DividedSeries;

pub use identity::{
    run_identity, run_suite, suite_passed, IdentityId, ReportStatus, SuiteConfig,
    VerificationReport, VerifyMode,
};

/// Errors from the verification driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    /// An identity name outside the registered catalog.
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

/// The coefficients `C_0..C_n` of a polynomial in a named basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisExpansion<K> {
    pub basis: FamilyId,
    pub coeffs: Vec<K>,
}

impl<K: Field> BasisExpansion<K> {
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }
}

/// Expands `p` in the basis `{H_{k,q}(x|lambda)}`:
/// `C_k = (p^(k)(1) - lambda p^(k)(0)) / ([k]_q! (1 - lambda))` where
/// `p^(k) = D_q^k p`.
pub fn expand_in_fe<K: Field>(ctx: &QContext<K>, p: &Poly<K>) -> BasisExpansion<K> {
    let n = p.degree().unwrap_or(0);
    let one_minus_lambda_inv = (K::one() - ctx.lambda().clone())
        .inv()
        .expect("lambda != 1 under the field configuration");
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut derivative = p.clone();
    for k in 0..=n {
        if k > 0 {
            derivative = derivative.q_derivative(ctx);
        }
        let at_one = derivative.eval(&K::one());
        let at_zero = derivative.coeff(0);
        let c = (at_one - ctx.lambda().clone() * at_zero)
            * ctx.q_factorial_inv(k as u32)
            * one_minus_lambda_inv.clone();
        coeffs.push(c);
    }
    BasisExpansion {
        basis: FamilyId::frobenius(),
        coeffs,
    }
}

/// Expands `p` in the order-r basis `{H^{(r)}_{k,q}(x|lambda)}` through the
/// kernel-power functional:
/// `C^r_k = (1/[k]_q!) < ((e_q(t)-lambda)/(1-lambda))^r | D_q^k p >`.
pub fn expand_in_fe_order_r<K: Field>(
    ctx: &QContext<K>,
    p: &Poly<K>,
    r: u32,
) -> BasisExpansion<K> {
    assert!(r >= 1, "order must be at least 1");
    let n = p.degree().unwrap_or(0);
    let kernel_pow = families::frobenius_kernel(ctx, n).pow(ctx, r);
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut derivative = p.clone();
    for k in 0..=n {
        if k > 0 {
            derivative = derivative.q_derivative(ctx);
        }
        let v = kernel_pow
            .apply_functional(&derivative)
            .expect("kernel order covers the degree");
        coeffs.push(v * ctx.q_factorial_inv(k as u32));
    }
    BasisExpansion {
        basis: FamilyId::frobenius_r(r),
        coeffs,
    }
}

/// The same order-r coefficients by the closed multinomial formula:
///
/// `C^r_k = (1/([k]_q! (1-lambda)^r)) * sum_{l>=0} sum_{j=0}^r
///  sum_{l_1+...+l_j=l} (binom(r,j) (-lambda)^{r-j} / prod_i [l_i]_q!)
///  p^(k+l)(0)`.
///
/// The l-sum stops at `deg p - k` because the higher q-derivatives vanish;
/// the j = 0 term is the single empty composition contributing 1 at l = 0.
pub fn expand_in_fe_order_r_multinomial<K: Field>(
    ctx: &QContext<K>,
    p: &Poly<K>,
    r: u32,
) -> BasisExpansion<K> {
    assert!(r >= 1, "order must be at least 1");
    let n = p.degree().unwrap_or(0);
    let one_minus_lambda_pow_inv = (K::one() - ctx.lambda().clone())
        .pow_u(r)
        .inv()
        .expect("lambda != 1 under the field configuration");

    // derivative values at zero: d0[m] = (D_q^m p)(0)
    let mut d0 = Vec::with_capacity(n + 1);
    let mut derivative = p.clone();
    for m in 0..=n {
        if m > 0 {
            derivative = derivative.q_derivative(ctx);
        }
        d0.push(derivative.coeff(0));
    }

    // weights[l] = sum_{j<=r} binom(r,j) (-lambda)^(r-j)
    //             * sum_{l_1+..+l_j=l} 1/([l_1]_q!...[l_j]_q!)
    let minus_lambda = -ctx.lambda().clone();
    let mut weights = Vec::with_capacity(n + 1);
    for l in 0..=n as u32 {
        let mut w = K::zero();
        for j in 0..=r {
            let binom = num_integer::binomial(
                num_bigint::BigInt::from(r),
                num_bigint::BigInt::from(j),
            );
            let scale = K::from_rational(crate::scalars::Rational::from_bigint(binom))
                * minus_lambda.pow_u(r - j);
            let mut inner = K::zero();
            for comp in families::weak_compositions(l, j) {
                let mut term = K::one();
                for &part in &comp {
                    term = term * ctx.q_factorial_inv(part);
                }
                inner = inner + term;
            }
            w = w + scale * inner;
        }
        weights.push(w);
    }

    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = K::zero();
        for l in 0..=(n - k) {
            if d0[k + l].is_zero() || weights[l].is_zero() {
                continue;
            }
            acc = acc + weights[l].clone() * d0[k + l].clone();
        }
        let c = acc * ctx.q_factorial_inv(k as u32) * one_minus_lambda_pow_inv.clone();
        coeffs.push(c);
    }
    BasisExpansion {
        basis: FamilyId::frobenius_r(r),
        coeffs,
    }
}

/// Rebuilds the polynomial `sum_k C_k * (basis polynomial k)`.
pub fn reconstruct<K: Field>(ctx: &QContext<K>, e: &BasisExpansion<K>) -> Poly<K> {
    if e.coeffs.is_empty() {
        return Poly::zero();
    }
    let polys = families::family_polys(ctx, e.basis, e.coeffs.len() - 1);
    let mut acc = Poly::zero();
    for (c, b) in e.coeffs.iter().zip(&polys) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Both sides of the functional/integral identity
/// `<(e_q(t)-1)/t | H_{n,q}(x|lambda)> = int_0^1 H_{n,q}(u|lambda) d_q u`,
/// computed by independent routes.
pub fn functional_bernoulli_identity<K: Field>(ctx: &QContext<K>, n: usize) -> (K, K) {
    let h = families::frobenius_euler_poly(ctx, n);
    let series = families::bernoulli_kernel(ctx, n.max(1));
    let lhs = series
        .apply_functional(&h)
        .expect("series order covers the degree");
    let rhs = h.q_integral(ctx, &K::zero(), &K::one());
    (lhs, rhs)
}

/// Orthogonality pairing
/// `(1/[n]_q!) < kernel^r t^k | H^{(r)}_{n,q}(x|lambda) >`; equals
/// `delta_{n,k}` when the basis polynomials are correct.
pub fn orthogonality_pairing<K: Field>(
    ctx: &QContext<K>,
    kernel_pow: &DividedSeries<K>,
    h_poly: &Poly<K>,
    n: usize,
    k: usize,
) -> K {
    let order = kernel_pow.order();
    let tk = DividedSeries::t_power(ctx, k, order);
    let paired = kernel_pow.mul(ctx, &tk);
    let v = paired
        .apply_functional(h_poly)
        .expect("series order covers the degree");
    v * ctx.q_factorial_inv(n as u32)
}
