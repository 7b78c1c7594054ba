//! The q-umbral algebra: truncated formal power series in `t` stored by
//! divided coefficients, acting on polynomials as linear functionals and as
//! operators.
//!
//! A series `f(t) = sum_k a_k t^k / [k]_q!` is stored by the `a_k` alone.
//! With that representation the functional action is a lookup,
//! `<f(t) | x^n> = a_n`, and the series product is the q-binomial
//! convolution `c_n = sum_k [n choose k]_q a_k b_{n-k}`.

use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qcore::{Poly, QContext};
use crate::scalars::Field;

/// Errors from the umbral layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmbralError {
    /// Inversion of a series whose constant divided coefficient is zero.
    #[error("series is not invertible (zero constant coefficient)")]
    NotInvertible,
    /// A functional or operator application on a polynomial of higher degree
    /// than the truncation order.
    #[error("series order {order} is below the polynomial degree {degree}")]
    OrderTooLow { order: usize, degree: usize },
}

/// A truncated divided-power series: `coeffs[k]` is the divided coefficient
/// `a_k = <f(t) | x^k>`, for `k = 0..=order`.
#[derive(Clone, PartialEq, Debug)]
pub struct DividedSeries<K> {
    coeffs: Vec<K>,
}

impl<K: Field> DividedSeries<K> {
    /// The multiplicative identity `1` (as a series) at the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![K::zero(); order + 1];
        coeffs[0] = K::one();
        DividedSeries { coeffs }
    }

    /// The q-exponential `e_q(t)`: every divided coefficient is 1.
    pub fn eq_series(order: usize) -> Self {
        DividedSeries {
            coeffs: vec![K::one(); order + 1],
        }
    }

    /// `e_q(yt)`: divided coefficients `y^k` (so `<e_q(yt) | x^n> = y^n`).
    pub fn scaled_eq(y: &K, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = K::one();
        for k in 0..=order {
            if k > 0 {
                acc = acc * y.clone();
            }
            coeffs.push(acc.clone());
        }
        DividedSeries { coeffs }
    }

    /// The monomial `t^k`: divided coefficient `[k]_q!` at position k.
    pub fn t_power(ctx: &QContext<K>, k: usize, order: usize) -> Self {
        let mut coeffs = vec![K::zero(); order + 1];
        if k <= order {
            coeffs[k] = ctx.q_factorial(k as u32);
        }
        DividedSeries { coeffs }
    }

    /// Builds from divided coefficients; the order is `len - 1`.
    pub fn from_divided_coeffs(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        DividedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Divided coefficient `a_k` (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Ordinary (non-divided) coefficient of `t^k`, i.e. `a_k / [k]_q!`.
    pub fn ordinary_coeff(&self, ctx: &QContext<K>, k: usize) -> K {
        self.coeff(k) * ctx.q_factorial_inv(k as u32)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        DividedSeries {
            coeffs: (0..=order).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        DividedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Product truncated to the smaller order: the q-binomial convolution.
    pub fn mul(&self, ctx: &QContext<K>, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = K::zero();
            for k in 0..=n {
                let a = self.coeff(k);
                if a.is_zero() {
                    continue;
                }
                let b = other.coeff(n - k);
                if b.is_zero() {
                    continue;
                }
                c = c + ctx.q_binomial(n as u32, k as i64) * a * b;
            }
            coeffs.push(c);
        }
        DividedSeries { coeffs }
    }

    /// Multiplicative inverse through the truncation order, by the
    /// triangular recurrence.
    pub fn inverse(&self, ctx: &QContext<K>) -> Result<Self, UmbralError> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(UmbralError::NotInvertible);
        }
        let a0_inv = a0.inv().expect("nonzero constant coefficient");
        let order = self.order();
        let mut g: Vec<K> = Vec::with_capacity(order + 1);
        g.push(a0_inv.clone());
        for n in 1..=order {
            let mut acc = K::zero();
            for k in 1..=n {
                let a = self.coeff(k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + ctx.q_binomial(n as u32, k as i64) * a * g[n - k].clone();
            }
            g.push(-(a0_inv.clone() * acc));
        }
        Ok(DividedSeries { coeffs: g })
    }

    /// r-th power; `pow(0)` is the identity series.
    pub fn pow(&self, ctx: &QContext<K>, r: u32) -> Self {
        let mut acc = DividedSeries::one(self.order());
        for _ in 0..r {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    /// The linear functional `<f(t) | p(x)> = sum_k b_k a_k` for
    /// `p = sum b_k x^k`.
    pub fn apply_functional(&self, p: &Poly<K>) -> Result<K, UmbralError> {
        let degree = p.degree().unwrap_or(0);
        if self.order() < degree {
            return Err(UmbralError::OrderTooLow {
                order: self.order(),
                degree,
            });
        }
        let mut acc = K::zero();
        for (k, b) in p.coeffs().iter().enumerate() {
            if !b.is_zero() {
                acc = acc + b.clone() * self.coeff(k);
            }
        }
        Ok(acc)
    }

    /// The operator action `f(t) p(x) = sum_k (a_k / [k]_q!) D_q^k p(x)`.
    pub fn apply_operator(&self, ctx: &QContext<K>, p: &Poly<K>) -> Result<Poly<K>, UmbralError> {
        let degree = p.degree().unwrap_or(0);
        if self.order() < degree {
            return Err(UmbralError::OrderTooLow {
                order: self.order(),
                degree,
            });
        }
        let mut acc = Poly::zero();
        let mut derivative = p.clone();
        for k in 0..=degree {
            if k > 0 {
                derivative = derivative.q_derivative(ctx);
            }
            let a = self.coeff(k);
            if a.is_zero() || derivative.is_zero() {
                continue;
            }
            let w = a * ctx.q_factorial_inv(k as u32);
            acc = acc.add(&derivative.scale(&w));
        }
        Ok(acc)
    }
}

impl<K: Field> Serialize for DividedSeries<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DividedSeries", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("divided_coeffs", &self.coeffs)?;
        s.end()
    }
}

impl<'de, K: Field + Deserialize<'de>> Deserialize<'de> for DividedSeries<K> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw<K> {
            order: usize,
            divided_coeffs: Vec<K>,
        }
        let raw = Raw::<K>::deserialize(deserializer)?;
        if raw.divided_coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom("divided_coeffs length must be order + 1"));
        }
        Ok(DividedSeries {
            coeffs: raw.divided_coeffs,
        })
    }
}
