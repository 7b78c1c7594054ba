//! Exact coefficient fields.
//!
//! Two fields implement the [`Field`] contract:
//!
//! * [`Rational`] - arbitrary-precision rationals, used when q and lambda are
//!   fixed rational values ("numeric mode");
//! * [`RatFunc`] - rational functions in the two indeterminates q and lambda
//!   over the rationals ("symbolic mode").
//!
//! Both keep every value in a canonical form, so equality of values is plain
//! structural comparison and a verified identity is a theorem instance, not a
//! floating-point coincidence.

mod gcd;
mod mpoly;
mod ratfunc;
mod rational;

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use mpoly::{MPoly, Mono};
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// Errors produced by the scalar fields.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Inversion of zero, or a zero denominator in a constructor.
    #[error("division by zero")]
    DivisionByZero,
    /// Evaluation of a rational function at a point where the reduced
    /// denominator vanishes.
    #[error("pole at q = {q}, lambda = {lambda}")]
    PoleAtPoint { q: Rational, lambda: Rational },
    /// A malformed rational literal.
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    /// A field configuration violating the mode invariants.
    #[error("invalid field configuration: {0}")]
    InvalidConfig(String),
}

/// The scalar field contract shared by numeric and symbolic modes.
///
/// All operations are pure, all values immutable; results are always in
/// canonical form, so `==` is decidable structural equality.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Serialize
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Fails on zero.
    fn inv(&self) -> Result<Self, ScalarError>;

    /// Embeds an exact rational constant.
    fn from_rational(r: Rational) -> Self;

    /// LaTeX rendering (rational functions use `\frac`).
    fn latex(&self) -> String;

    /// Embeds a small integer constant.
    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// Checked division.
    fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Nonnegative integer power by repeated squaring.
    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Renders the value for use as a factor inside a polynomial term:
    /// bare integers stay bare, anything composite is parenthesized.
    fn fmt_coefficient(&self) -> String {
        let s = self.to_string();
        let body = s.strip_prefix('-').unwrap_or(&s);
        if !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit()) {
            s
        } else {
            format!("({s})")
        }
    }
}

/// Which scalar field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldMode {
    /// Exact rationals; q and lambda are fixed rational values.
    NumericRational,
    /// Rational functions of the indeterminates q and lambda.
    SymbolicQLambda,
}

/// Validated description of the scalar field for a run.
///
/// Numeric mode requires concrete values with q not a root of unity (over the
/// rationals that means q != 1 and q != -1, so every q-integer `[n]_q` is
/// invertible; q = 0 is allowed) and lambda != 1. Symbolic mode carries no
/// values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub mode: FieldMode,
    pub q_value: Option<Rational>,
    pub lambda_value: Option<Rational>,
}

impl FieldConfig {
    /// The symbolic (rational function) configuration.
    pub fn symbolic() -> Self {
        FieldConfig {
            mode: FieldMode::SymbolicQLambda,
            q_value: None,
            lambda_value: None,
        }
    }

    /// A numeric configuration; validates the mode invariants.
    pub fn numeric(q: Rational, lambda: Rational) -> Result<Self, ScalarError> {
        let cfg = FieldConfig {
            mode: FieldMode::NumericRational,
            q_value: Some(q),
            lambda_value: Some(lambda),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks the mode invariants.
    pub fn validate(&self) -> Result<(), ScalarError> {
        match self.mode {
            FieldMode::NumericRational => {
                let q = self.q_value.as_ref().ok_or_else(|| {
                    ScalarError::InvalidConfig("numeric mode requires a q value".into())
                })?;
                let lambda = self.lambda_value.as_ref().ok_or_else(|| {
                    ScalarError::InvalidConfig("numeric mode requires a lambda value".into())
                })?;
                let one = Rational::from_integer(1);
                let minus_one = Rational::from_integer(-1);
                if *q == one || *q == minus_one {
                    return Err(ScalarError::InvalidConfig(
                        "q must not be a root of unity (q != 1 and q != -1)".into(),
                    ));
                }
                if *lambda == one {
                    return Err(ScalarError::InvalidConfig("lambda must not equal 1".into()));
                }
                Ok(())
            }
            FieldMode::SymbolicQLambda => {
                if self.q_value.is_some() || self.lambda_value.is_some() {
                    return Err(ScalarError::InvalidConfig(
                        "symbolic mode carries no q or lambda values".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}
