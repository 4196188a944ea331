//! Coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`]. The exact instance is
//! [`Rational`]; `f32`/`f64` work for the arithmetic but give up exact
//! equality, so the algorithms that must decide whether a value is zero
//! (unit tests, Weierstrass preparation, root finding) are only trustworthy
//! over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{NumAssignRef, NumRef, Signed};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A coefficient field usable by the polynomial and series types.
pub trait Scalar:
    Signed + NumRef + NumAssignRef + Clone + PartialEq + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: Signed + NumRef + NumAssignRef + Clone + PartialEq + fmt::Debug + fmt::Display + 'static
{
}

/// Shorthand for building an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
