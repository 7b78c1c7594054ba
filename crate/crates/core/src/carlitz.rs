//! Carlitz q-Bernoulli numbers and polynomials, and a constructive expansion
//! of polynomials in `[x]_q` over the Carlitz basis.
//!
//! The representation choice that makes everything polynomial: write
//! `y = q^x`. Then `q^{lx} = y^l` and `[x]_q = (1 - y)/(1 - q)`, so the
//! degree-n Carlitz polynomial is a degree-n polynomial in y over the
//! rational functions of q. Its leading y-coefficient
//! `(-1)^n (n+1) / ((1-q)^n [n+1]_q)` never vanishes, which makes the basis
//! change triangular and the expansion solvable by back-substitution.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qcore::{Poly, QContext};
use crate::scalars::{Field, RatFunc, Rational};

/// A polynomial in `y = q^x` with coefficients in the rational functions
/// of q.
#[derive(Debug, Clone, PartialEq)]
pub struct CarlitzPoly(pub Poly<RatFunc>);

/// A polynomial in the formal symbol `[x]_q` with coefficients in the
/// rational functions of q.
#[derive(Debug, Clone, PartialEq)]
pub struct QBracketPoly(pub Poly<RatFunc>);

impl CarlitzPoly {
    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Value at `y = 1`, i.e. at `x = 0`.
    pub fn at_x_zero(&self) -> RatFunc {
        self.0.eval(&RatFunc::one())
    }
}

impl QBracketPoly {
    pub fn from_coeffs(coeffs: Vec<RatFunc>) -> Self {
        QBracketPoly(Poly::from_coeffs(coeffs))
    }

    /// Rewrites `p([x]_q)` as a polynomial in `y` via
    /// `[x]_q = (1 - y)/(1 - q)`.
    pub fn to_y_form(&self, ctx: &QContext<RatFunc>) -> Poly<RatFunc> {
        let bracket = bracket_as_y_poly(ctx);
        // Horner in the substituted variable
        let mut acc: Poly<RatFunc> = Poly::zero();
        for c in self.0.coeffs().iter().rev() {
            acc = acc.mul(&bracket).add(&Poly::constant(c.clone()));
        }
        acc
    }
}

/// `[x]_q` as a polynomial in y: `(1 - y)/(1 - q)`.
fn bracket_as_y_poly(ctx: &QContext<RatFunc>) -> Poly<RatFunc> {
    let scale = (RatFunc::one() - ctx.q().clone())
        .inv()
        .expect("1 - q nonzero in the rational function field");
    Poly::from_coeffs(vec![scale.clone(), -scale])
}

/// `(-1)^l (l+1)/[l+1]_q` without the `(1-q)^{-n}` prefactor.
fn closed_form_term(ctx: &QContext<RatFunc>, n: u32, l: u32) -> RatFunc {
    let b = binomial(BigInt::from(n), BigInt::from(l));
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let num = RatFunc::from_rational(Rational::from_bigint(b * BigInt::from(sign)))
        * RatFunc::from_int(l as i64 + 1);
    num * ctx
        .q_int(l + 1)
        .inv()
        .expect("[l+1]_q nonzero in the rational function field")
}

/// Carlitz q-Bernoulli numbers `beta_0..beta_N` over the rational functions
/// of q, from the closed form
/// `beta_n = (1/(1-q)^n) sum_l binom(n,l) (-1)^l (l+1)/[l+1]_q`
/// (ordinary binomials; the q -> 1 limit recovers the classical Bernoulli
/// numbers after cancellation).
pub fn carlitz_numbers(ctx: &QContext<RatFunc>, n_max: usize) -> Vec<RatFunc> {
    let one_minus_q_inv = (RatFunc::one() - ctx.q().clone())
        .inv()
        .expect("1 - q nonzero in the rational function field");
    (0..=n_max)
        .map(|n| {
            let mut acc = RatFunc::zero();
            for l in 0..=n as u32 {
                acc = acc + closed_form_term(ctx, n as u32, l);
            }
            acc * one_minus_q_inv.pow_u(n as u32)
        })
        .collect()
}

/// `beta_n(x)` in the y-representation: the coefficient of `y^l` is
/// `(1/(1-q)^n) binom(n,l) (-1)^l (l+1)/[l+1]_q`.
pub fn carlitz_poly(ctx: &QContext<RatFunc>, n: usize) -> CarlitzPoly {
    let one_minus_q_inv = (RatFunc::one() - ctx.q().clone())
        .inv()
        .expect("1 - q nonzero in the rational function field");
    let prefactor = one_minus_q_inv.pow_u(n as u32);
    let coeffs = (0..=n as u32)
        .map(|l| closed_form_term(ctx, n as u32, l) * prefactor.clone())
        .collect();
    CarlitzPoly(Poly::from_coeffs(coeffs))
}

/// `beta_n(x) = sum_l binom(n,l) q^{lx} beta_l [x]_q^{n-l}` rebuilt in the
/// y-representation from the numbers; must equal [`carlitz_poly`].
pub fn carlitz_poly_via_numbers(ctx: &QContext<RatFunc>, n: usize) -> CarlitzPoly {
    let numbers = carlitz_numbers(ctx, n);
    let bracket = bracket_as_y_poly(ctx);
    let mut acc: Poly<RatFunc> = Poly::zero();
    for l in 0..=n {
        let b = binomial(BigInt::from(n), BigInt::from(l));
        let scale = RatFunc::from_rational(Rational::from_bigint(b)) * numbers[l].clone();
        // q^{lx} = y^l
        let term = Poly::<RatFunc>::x_pow(l as u32)
            .mul(&bracket.pow((n - l) as u32))
            .scale(&scale);
        acc = acc.add(&term);
    }
    CarlitzPoly(acc)
}

/// Expands `p([x]_q)` in the Carlitz basis: returns `C_0..C_n` with
/// `p([x]_q) = sum_k C_k beta_k(x)` exactly (in the y-representation).
///
/// The system is upper triangular because `deg_y beta_k = k`, so
/// back-substitution always succeeds. This is a constructive algorithm with
/// exact rational-function output; no closed form for the coefficients is
/// asserted.
pub fn expand_in_carlitz_basis(ctx: &QContext<RatFunc>, p: &QBracketPoly) -> Vec<RatFunc> {
    let mut target = p.to_y_form(ctx);
    let n = target.degree().unwrap_or(0).max(p.0.degree().unwrap_or(0));
    let basis: Vec<CarlitzPoly> = (0..=n).map(|k| carlitz_poly(ctx, k)).collect();
    let mut coeffs = vec![RatFunc::zero(); n + 1];
    for k in (0..=n).rev() {
        let deg = match target.degree() {
            Some(d) => d,
            None => break,
        };
        if deg < k {
            continue;
        }
        debug_assert_eq!(deg, k);
        let lead_b = basis[k].0.leading_coeff().expect("degree invariant").clone();
        let c = target
            .leading_coeff()
            .expect("nonzero target")
            .clone()
            .div(&lead_b)
            .expect("leading coefficient nonzero");
        target = target.sub(&basis[k].0.scale(&c));
        coeffs[k] = c;
    }
    debug_assert!(target.is_zero());
    coeffs
}

/// Classical Bernoulli numbers `B_0..B_N` by the standard recurrence
/// `B_n = -(1/(n+1)) sum_{k<n} binom(n+1,k) B_k`; the independent oracle for
/// every q -> 1 limit check.
pub fn classical_bernoulli(n_max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n_max + 1);
    out.push(Rational::from_integer(1));
    for n in 1..=n_max {
        let mut acc = Rational::from_integer(0);
        for (k, b) in out.iter().enumerate() {
            let c = binomial(BigInt::from(n + 1), BigInt::from(k));
            acc = acc + Rational::from_bigint(c) * b.clone();
        }
        let scale = Rational::new(BigInt::from(-1), BigInt::from(n as i64 + 1))
            .expect("nonzero denominator");
        out.push(scale * acc);
    }
    out
}

impl Serialize for CarlitzPoly {
    /// `{"variable": "q^x", "coeffs": [...]}` with coefficients indexed by
    /// the power of y.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CarlitzPoly", 2)?;
        s.serialize_field("variable", "q^x")?;
        s.serialize_field("coeffs", &self.0)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for CarlitzPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            variable: String,
            coeffs: Poly<RatFunc>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.variable != "q^x" {
            return Err(D::Error::custom("expected variable \"q^x\""));
        }
        Ok(CarlitzPoly(raw.coeffs))
    }
}
