//! Dense polynomials in x over a scalar field, with the q-derivative and the
//! Jackson q-integral.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::Field;

use super::QContext;

/// A dense polynomial `sum c_k x^k`. The highest-index coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::x_pow(1)
    }

    /// The monomial `x^n`.
    pub fn x_pow(n: u32) -> Self {
        let mut coeffs = vec![K::zero(); n as usize + 1];
        coeffs[n as usize] = K::one();
        Poly { coeffs }
    }

    /// Builds from coefficients (index = power of x), trimming trailing
    /// zeros.
    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero when out of range).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly<K>) -> Poly<K> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Poly<K> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Poly<K>) -> Poly<K> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Poly<K> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// The q-derivative: `c_k x^k -> c_k [k]_q x^(k-1)`.
    pub fn q_derivative(&self, ctx: &QContext<K>) -> Poly<K> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * ctx.q_int(i as u32 + 1))
            .collect();
        Poly::from_coeffs(out)
    }

    /// k-fold q-derivative.
    pub fn q_derivative_k(&self, ctx: &QContext<K>, k: u32) -> Poly<K> {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.q_derivative(ctx);
        }
        p
    }

    /// The Jackson antiderivative: `c_k x^k -> c_k x^(k+1) / [k+1]_q`, with
    /// zero constant term.
    pub fn q_antiderivative(&self, ctx: &QContext<K>) -> Poly<K> {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(K::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            let inv = ctx
                .q_int(k as u32 + 1)
                .inv()
                .expect("[k+1]_q invertible under the field configuration");
            out.push(c.clone() * inv);
        }
        Poly::from_coeffs(out)
    }

    /// The definite Jackson q-integral `F(b) - F(a)` with `F` the
    /// antiderivative.
    pub fn q_integral(&self, ctx: &QContext<K>, a: &K, b: &K) -> K {
        let anti = self.q_antiderivative(ctx);
        anti.eval(b) - anti.eval(a)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpow = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ if latex => format!("x^{{{k}}}"),
                _ => format!("x^{k}"),
            };
            let piece = if k == 0 {
                let s = if latex { c.latex() } else { c.to_string() };
                let (neg, abs) = sign_split(&s);
                if top_level_pm(&abs) {
                    (neg, format!("({abs})"))
                } else {
                    (neg, abs)
                }
            } else if c.is_one() {
                (false, xpow)
            } else if (c.clone() + K::one()).is_zero() {
                (true, xpow)
            } else {
                let s = if latex { c.latex() } else { c.to_string() };
                let (neg, abs) = sign_split(&s);
                let body = if latex {
                    if top_level_pm(&abs) {
                        format!("\\left({abs}\\right) {xpow}")
                    } else {
                        format!("{abs} {xpow}")
                    }
                } else if top_level_pm(&abs) || abs.contains('/') {
                    format!("({abs})*{xpow}")
                } else {
                    format!("{abs}*{xpow}")
                };
                (neg, body)
            };
            pieces.push(piece);
        }
        let mut out = String::new();
        for (i, (neg, body)) in pieces.iter().enumerate() {
            if i == 0 {
                if *neg {
                    out.push('-');
                }
            } else if *neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(body);
        }
        out
    }

    /// LaTeX rendering.
    pub fn latex(&self) -> String {
        self.render(true)
    }
}

/// True when the string has a `+` or `-` outside any bracket (ignoring a
/// leading sign).
fn top_level_pm(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Splits a leading minus when the remainder is a single product term.
fn sign_split(s: &str) -> (bool, String) {
    if let Some(rest) = s.strip_prefix('-') {
        if !top_level_pm(rest) {
            return (true, rest.to_string());
        }
    }
    (false, s.to_string())
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Rational};
    use num_traits::{One, Zero};

    fn sym() -> QContext<RatFunc> {
        QContext::symbolic()
    }

    #[test]
    fn trims_and_reports_degree() {
        let p: Poly<Rational> = Poly::from_coeffs(vec![
            Rational::from_integer(1),
            Rational::from_integer(0),
            Rational::from_integer(0),
        ]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::<Rational>::zero().degree(), None);
    }

    #[test]
    fn q_derivative_term_wise() {
        let ctx = sym();
        // D_q (x^2 + x) = (1+q) x + 1
        let p: Poly<RatFunc> = Poly::x_pow(2).add(&Poly::x());
        let d = p.q_derivative(&ctx);
        assert_eq!(d.coeff(0), RatFunc::one());
        assert_eq!(d.coeff(1), ctx.q_int(2));
        assert_eq!(d.degree(), Some(1));
        // constants vanish
        assert!(Poly::constant(RatFunc::from_int(5)).q_derivative(&ctx).is_zero());
        // D_q x^n = [n]_q x^(n-1)
        let n = 7u32;
        let dxn = Poly::<RatFunc>::x_pow(n).q_derivative(&ctx);
        assert_eq!(dxn, Poly::x_pow(n - 1).scale(&ctx.q_int(n)));
    }

    #[test]
    fn q_derivative_matches_difference_quotient_numeric() {
        // (p(x0) - p(q x0)) / ((1-q) x0) at random-ish rational points
        let ctx = QContext::numeric(Rational::ratio(2, 3), Rational::from_integer(5)).unwrap();
        let p: Poly<Rational> = Poly::from_coeffs(
            [3, -1, 0, 7, 2, -5, 1, 4, -2, 6, 9]
                .iter()
                .map(|&c| Rational::from_integer(c))
                .collect(),
        );
        let d = p.q_derivative(&ctx);
        for x0 in [Rational::ratio(5, 7), Rational::ratio(-3, 2), Rational::from_integer(2)] {
            let qx0 = ctx.q().clone() * x0.clone();
            let quotient = (p.eval(&x0) - p.eval(&qx0))
                .div(&((Rational::from_integer(1) - ctx.q().clone()) * x0.clone()))
                .unwrap();
            assert_eq!(d.eval(&x0), quotient);
        }
    }

    #[test]
    fn derivative_iterates() {
        let ctx = sym();
        let p: Poly<RatFunc> = Poly::x_pow(2);
        assert_eq!(p.q_derivative_k(&ctx, 0), p);
        // D_q^n x^n = [n]_q!
        for n in 0..=6u32 {
            let d = Poly::<RatFunc>::x_pow(n).q_derivative_k(&ctx, n);
            assert_eq!(d, Poly::constant(ctx.q_factorial(n)), "n={n}");
        }
        assert!(Poly::<RatFunc>::x_pow(2).q_derivative_k(&ctx, 3).is_zero());
    }

    #[test]
    fn antiderivative_term_wise() {
        let ctx = sym();
        assert!(Poly::<RatFunc>::zero().q_antiderivative(&ctx).is_zero());
        // integral of x^n is x^(n+1)/[n+1]_q
        let n = 4u32;
        let a = Poly::<RatFunc>::x_pow(n).q_antiderivative(&ctx);
        assert_eq!(
            a,
            Poly::x_pow(n + 1).scale(&ctx.q_int(n + 1).inv().unwrap())
        );
        // 1 + x -> x + x^2/(1+q)
        let p: Poly<RatFunc> = Poly::one().add(&Poly::x());
        let a = p.q_antiderivative(&ctx);
        assert_eq!(a.coeff(0), RatFunc::zero());
        assert_eq!(a.coeff(1), RatFunc::one());
        assert_eq!(a.coeff(2), ctx.q_int(2).inv().unwrap());
    }

    #[test]
    fn fundamental_theorem() {
        let ctx = sym();
        // D_q of the antiderivative is the identity on polynomials
        let p: Poly<RatFunc> = Poly::from_coeffs(
            (0..=12)
                .map(|i| RatFunc::from_int(if i % 3 == 0 { i - 5 } else { 2 * i + 1 }))
                .collect(),
        );
        assert_eq!(p.q_antiderivative(&ctx).q_derivative(&ctx), p);
    }

    #[test]
    fn integral_endpoints() {
        let ctx = sym();
        let p: Poly<RatFunc> = Poly::x_pow(3).add(&Poly::one());
        let a = RatFunc::var_lambda();
        assert!(p.q_integral(&ctx, &a, &a).is_zero());
        // integral of 1 over [0,1] is 1
        assert!(Poly::<RatFunc>::one()
            .q_integral(&ctx, &RatFunc::zero(), &RatFunc::one())
            .is_one());
        // integral of x^n over [0, x0] is x0^(n+1)/[n+1]_q
        let x0 = RatFunc::var_lambda();
        let val = Poly::<RatFunc>::x_pow(5).q_integral(&ctx, &RatFunc::zero(), &x0);
        assert_eq!(val, x0.pow_u(6) * ctx.q_int(6).inv().unwrap());
    }

    #[test]
    fn horner_eval() {
        let ctx = sym();
        let p: Poly<RatFunc> = Poly::x_pow(2);
        let v = ctx.q_int(2); // 1 + q
        assert_eq!(p.eval(&v), ctx.q_int(2).pow_u(2));
        // evaluation at zero picks the constant term
        let p2: Poly<RatFunc> = Poly::from_coeffs(vec![RatFunc::var_lambda(), RatFunc::var_q()]);
        assert_eq!(p2.eval(&RatFunc::zero()), RatFunc::var_lambda());
    }

    #[test]
    fn display_poly() {
        let p: Poly<Rational> = Poly::from_coeffs(vec![
            Rational::from_integer(3),
            Rational::ratio(-1, 2),
            Rational::from_integer(0),
            Rational::from_integer(1),
        ]);
        assert_eq!(p.to_string(), "x^3 - (1/2)*x + 3");
    }
}
