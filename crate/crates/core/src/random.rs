//! Seeded random generation of scalars, points and polynomials.
//!
//! Numeric-mode identity trials are Schwartz-Zippel style: the check runs in
//! exact rational arithmetic at randomly chosen admissible (q, lambda)
//! points. Everything here is deterministic in the seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qcore::Poly;
use crate::scalars::{Field, MPoly, RatFunc, Rational};

/// A deterministic RNG for the given seed and stream (stream separates
/// independent uses of the same user seed).
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A small rational with numerator in [-9, 9] and denominator in [1, 9].
pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-9i64..=9);
    let d = rng.gen_range(1i64..=9);
    Rational::ratio(n, d)
}

/// A small nonzero rational.
pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// An admissible numeric point: q not in {1, -1}, lambda != 1.
pub fn numeric_point(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let one = Rational::from_integer(1);
    let minus_one = Rational::from_integer(-1);
    let q = loop {
        let c = rational(rng);
        if c != one && c != minus_one {
            break c;
        }
    };
    let lambda = loop {
        let c = rational(rng);
        if c != one {
            break c;
        }
    };
    (q, lambda)
}

/// A random polynomial of exactly the given degree with small rational
/// coefficients.
pub fn poly<K: Field>(rng: &mut ChaCha8Rng, degree: usize) -> Poly<K> {
    let mut coeffs: Vec<K> = (0..=degree)
        .map(|_| K::from_rational(rational(rng)))
        .collect();
    coeffs[degree] = K::from_rational(nonzero_rational(rng));
    Poly::from_coeffs(coeffs)
}

/// A random bivariate polynomial with bounded degrees and a bounded number
/// of terms.
pub fn mpoly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> MPoly {
    let terms = rng.gen_range(0..=max_terms);
    let mut out = MPoly::zero();
    for _ in 0..terms {
        let dq = rng.gen_range(0..=max_deg);
        let dl = rng.gen_range(0..=max_deg);
        out = out.add(&MPoly::monomial(rational(rng), dq, dl));
    }
    out
}

/// A random nonzero bivariate polynomial.
pub fn nonzero_mpoly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> MPoly {
    loop {
        let p = mpoly(rng, max_deg, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random rational function (bounded numerator and denominator).
pub fn ratfunc(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> RatFunc {
    let num = mpoly(rng, max_deg, max_terms);
    let den = nonzero_mpoly(rng, max_deg, max_terms);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// A random nonzero rational function.
pub fn nonzero_ratfunc(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> RatFunc {
    loop {
        let f = ratfunc(rng, max_deg, max_terms);
        if !num_traits::Zero::is_zero(&f) {
            return f;
        }
    }
}
