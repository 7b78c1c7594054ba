//! Exact q-umbral calculus over pluggable exact scalar fields.
//!
//! The crate computes q-Bernoulli, q-Euler, q-Frobenius-Euler (order 1 and
//! order r) and Carlitz q-Bernoulli numbers and polynomials, expands
//! polynomials in the Frobenius-Euler bases, and mechanically verifies the
//! identity catalog that relates all of these objects. Every computation is
//! exact: coefficients live either in the rationals (numeric mode, with q and
//! lambda fixed to rational values) or in the field of rational functions of
//! the two indeterminates q and lambda (symbolic mode).
//!
//! Module map:
//!
//! * [`scalars`] - the two coefficient fields and their canonical forms.
//! * [`qcore`] - q-integers, q-factorials, Gaussian binomials, and the
//!   q-derivative / Jackson q-integral calculus on dense polynomials.
//! * [`umbral`] - truncated divided-power series in `t`, their algebra, and
//!   the linear-functional / operator actions on polynomials.
//! * [`families`] - generators for all polynomial families.
//! * [`basis`] - basis conversion into the Frobenius-Euler bases and the
//!   identity verification suite.
//! * [`carlitz`] - Carlitz q-Bernoulli numbers/polynomials in the variable
//!   `y = q^x`, plus the constructive expansion solver.
//! * [`random`] - seeded generators used by numeric trials and tests.

pub mod basis;
pub mod carlitz;
pub mod families;
pub mod qcore;
pub mod random;
pub mod scalars;
pub mod umbral;

pub use basis::BasisExpansion;
pub use families::{FamilyId, FamilyKind, NumberTable};
pub use qcore::{Poly, QContext};
pub use scalars::{Field, FieldConfig, FieldMode, MPoly, RatFunc, Rational, ScalarError};
pub use umbral::DividedSeries;

/// Scalar type used in numeric mode: exact rationals with q and lambda fixed.
pub type Numeric = Rational;
/// Scalar type used in symbolic mode: rational functions of q and lambda.
pub type Symbolic = RatFunc;

/// Dense polynomial over the numeric-mode scalar field.
pub type NumericPoly = Poly<Numeric>;
/// Dense polynomial over the symbolic-mode scalar field.
pub type SymbolicPoly = Poly<Symbolic>;
