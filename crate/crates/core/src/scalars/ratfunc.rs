//! The field of rational functions in q and lambda over the rationals.
//!
//! Canonical form: `num/den` with `gcd(num, den) = 1` under the canonical gcd
//! procedure and `den` monic in the canonical term order (so its leading
//! coefficient is 1, which in particular is positive). Zero is `0/1`. With
//! this normalization equality is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, MPoly, Rational, ScalarError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form. Fails when `den` is zero.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(mut num: MPoly, mut den: MPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        if !den.is_one() {
            let g = MPoly::gcd(&num, &den);
            if !g.is_one() && !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc != Rational::from_integer(1) {
            let inv = lc.inv().expect("leading coefficient nonzero");
            num = num.scalar_mul(&inv);
            den = den.scalar_mul(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_mpoly(p: MPoly) -> Self {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_mpoly(MPoly::constant(c))
    }

    /// The indeterminate q.
    pub fn var_q() -> Self {
        Self::from_mpoly(MPoly::var_q())
    }

    /// The indeterminate lambda.
    pub fn var_lambda() -> Self {
        Self::from_mpoly(MPoly::var_lambda())
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_rational()
        } else {
            None
        }
    }

    pub fn add_ref(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return Self::canonical(num, self.den.clone());
        }
        let g = MPoly::gcd(&self.den, &other.den);
        if g.is_one() {
            // coprime denominators: the sum is already reduced
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return RatFunc::zero();
            }
            let den = self.den.mul(&other.den);
            return RatFunc { num, den };
        }
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        if num.is_zero() {
            return RatFunc::zero();
        }
        Self::canonical(num, den)
    }

    pub fn sub_ref(&self, other: &RatFunc) -> RatFunc {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = MPoly::gcd(&self.num, &other.den);
        let g2 = MPoly::gcd(&other.num, &self.den);
        let na = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).expect("gcd divides")
        };
        let db = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).expect("gcd divides")
        };
        let nb = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).expect("gcd divides")
        };
        let da = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).expect("gcd divides")
        };
        let num = na.mul(&nb);
        let den = da.mul(&db);
        // cross-cancelled parts stay pairwise coprime; only rescale
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc == Rational::from_integer(1) {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc {
                num: num.scalar_mul(&inv),
                den: den.scalar_mul(&inv),
            }
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<RatFunc, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let lc = self.num.leading_coeff().expect("nonzero").clone();
        let inv = lc.inv().expect("nonzero");
        Ok(RatFunc {
            num: self.den.scalar_mul(&inv),
            den: self.num.scalar_mul(&inv),
        })
    }

    /// Substitutes `q = q0`, `lambda = lambda0` into the reduced form.
    pub fn evaluate(&self, q0: &Rational, lambda0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(q0, lambda0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint {
                q: q0.clone(),
                lambda: lambda0.clone(),
            });
        }
        Ok(&self.num.eval(q0, lambda0) / &d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.term_count() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let den = if self.den.term_count() > 1 {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{num}/{den}")
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.sub_ref(&rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on a zero divisor; use [`Field::div`] for the checked form.
    fn div(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs.inv().expect("rational function division by zero"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_ref(rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.sub_ref(rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_ref(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, ScalarError> {
        RatFunc::inv(self)
    }

    fn from_rational(r: Rational) -> Self {
        RatFunc::constant(r)
    }

    fn latex(&self) -> String {
        if self.den.is_one() {
            self.num.latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RatFunc", 2)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: MPoly,
            den: MPoly,
        }
        let raw = Raw::deserialize(deserializer)?;
        RatFunc::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}
