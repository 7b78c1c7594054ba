//! q-combinatorics and q-calculus.
//!
//! [`QContext`] fixes the scalars q and lambda inside the coefficient field
//! and provides the q-integers, q-factorials, Gaussian binomials and
//! q-multinomials built from them. All cached values are transparent: the
//! caches only memoize results that would be recomputed identically.

pub mod poly;

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::scalars::{Field, FieldConfig, RatFunc, Rational, ScalarError};

pub use poly::Poly;

/// Errors from the q-combinatorics layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QcoreError {
    /// `q_multinomial` called with parts that do not sum to n.
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: u32, sum: u32 },
    /// The infinite q-shifted factorial is not materialized symbolically.
    #[error("infinite q-shifted factorial is unsupported")]
    InfiniteShiftedFactorial,
}

/// Order of a q-shifted factorial `(a:q)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftedOrder {
    Finite(u32),
    Infinite,
}

/// The scalar context: the values of q and lambda inside `K`, plus caches
/// for q-integers, powers, factorials and binomials.
///
/// All operations are pure; the context is safe to share across threads.
pub struct QContext<K: Field> {
    q: K,
    lambda: K,
    q_pows: Mutex<Vec<K>>,
    q_ints: Mutex<Vec<K>>,
    q_facts: Mutex<Vec<K>>,
    q_binoms: Mutex<HashMap<(u32, u32), K>>,
}

impl QContext<RatFunc> {
    /// Symbolic context: q and lambda are the two indeterminates.
    pub fn symbolic() -> Self {
        Self::with_scalars(RatFunc::var_q(), RatFunc::var_lambda())
    }
}

impl QContext<Rational> {
    /// Numeric context with fixed rational q and lambda; validates the
    /// configuration invariants.
    pub fn numeric(q: Rational, lambda: Rational) -> Result<Self, ScalarError> {
        FieldConfig::numeric(q.clone(), lambda.clone())?;
        Ok(Self::with_scalars(q, lambda))
    }
}

impl<K: Field> QContext<K> {
    /// Context from explicit scalar values. The caller is responsible for
    /// choosing values that keep every `[n]_q` invertible.
    pub fn with_scalars(q: K, lambda: K) -> Self {
        QContext {
            q,
            lambda,
            q_pows: Mutex::new(vec![K::one()]),
            q_ints: Mutex::new(vec![K::zero()]),
            q_facts: Mutex::new(vec![K::one()]),
            q_binoms: Mutex::new(HashMap::new()),
        }
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    pub fn lambda(&self) -> &K {
        &self.lambda
    }

    pub fn int(&self, n: i64) -> K {
        K::from_int(n)
    }

    /// `q^n`.
    pub fn q_pow(&self, n: u32) -> K {
        let mut pows = self.q_pows.lock().unwrap();
        while pows.len() <= n as usize {
            let next = pows.last().unwrap().clone() * self.q.clone();
            pows.push(next);
        }
        pows[n as usize].clone()
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`, in summation form so
    /// that q = 1 needs no special casing.
    pub fn q_int(&self, n: u32) -> K {
        {
            let ints = self.q_ints.lock().unwrap();
            if let Some(v) = ints.get(n as usize) {
                return v.clone();
            }
        }
        let mut next_pow = {
            let ints = self.q_ints.lock().unwrap();
            ints.len() as u32 - 1
        };
        loop {
            let pow = self.q_pow(next_pow);
            let mut ints = self.q_ints.lock().unwrap();
            if ints.len() as u32 == next_pow + 1 {
                let v = ints.last().unwrap().clone() + pow;
                ints.push(v);
            }
            if let Some(v) = ints.get(n as usize) {
                return v.clone();
            }
            next_pow = ints.len() as u32 - 1;
        }
    }

    /// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
    pub fn q_factorial(&self, n: u32) -> K {
        {
            let facts = self.q_facts.lock().unwrap();
            if let Some(v) = facts.get(n as usize) {
                return v.clone();
            }
        }
        loop {
            let m = {
                let facts = self.q_facts.lock().unwrap();
                facts.len() as u32
            };
            let factor = self.q_int(m);
            let mut facts = self.q_facts.lock().unwrap();
            if facts.len() as u32 == m {
                let v = facts.last().unwrap().clone() * factor;
                facts.push(v);
            }
            if let Some(v) = facts.get(n as usize) {
                return v.clone();
            }
        }
    }

    /// Inverse of `[n]_q!`; always defined under the configuration
    /// invariants.
    pub fn q_factorial_inv(&self, n: u32) -> K {
        self.q_factorial(n)
            .inv()
            .expect("[n]_q! invertible under the field configuration")
    }

    /// Gaussian binomial `[n choose k]_q`; zero outside `0 <= k <= n`.
    pub fn q_binomial(&self, n: u32, k: i64) -> K {
        if k < 0 || k > n as i64 {
            return K::zero();
        }
        let k = k as u32;
        let key = (n, k.min(n - k));
        {
            let cache = self.q_binoms.lock().unwrap();
            if let Some(v) = cache.get(&key) {
                return v.clone();
            }
        }
        let num = self.q_factorial(n);
        let den = self.q_factorial(key.1) * self.q_factorial(n - key.1);
        let v = num
            .div(&den)
            .expect("q-factorials invertible under the field configuration");
        self.q_binoms.lock().unwrap().insert(key, v.clone());
        v
    }

    /// q-multinomial `[n]_q! / ([i_1]_q! ... [i_r]_q!)` for parts summing
    /// to n.
    pub fn q_multinomial(&self, n: u32, parts: &[u32]) -> Result<K, QcoreError> {
        let sum: u32 = parts.iter().sum();
        if sum != n {
            return Err(QcoreError::PartsMismatch { n, sum });
        }
        let mut den = K::one();
        for &p in parts {
            den = den * self.q_factorial(p);
        }
        Ok(self
            .q_factorial(n)
            .div(&den)
            .expect("q-factorials invertible under the field configuration"))
    }

    /// q-shifted factorial `(a:q)_n = prod_{i<n} (1 - a q^i)`.
    pub fn q_shifted_factorial(&self, a: &K, order: ShiftedOrder) -> Result<K, QcoreError> {
        let n = match order {
            ShiftedOrder::Finite(n) => n,
            ShiftedOrder::Infinite => return Err(QcoreError::InfiniteShiftedFactorial),
        };
        let mut acc = K::one();
        for i in 0..n {
            let factor = K::one() - a.clone() * self.q_pow(i);
            acc = acc * factor;
        }
        Ok(acc)
    }
}
