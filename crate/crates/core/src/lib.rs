//! Lazy multivariate power series over exact rationals.
//!
//! The building blocks are:
//!
//! - [`SparsePoly`]: sparse multivariate polynomials in canonical form, the
//!   representation of every homogeneous part;
//! - [`PowerSeries`]: lazily evaluated power series with cached homogeneous
//!   parts;
//! - [`Upops`]: univariate polynomials whose coefficients are power series,
//!   with Weierstrass preparation, Taylor shift and Hensel factorization;
//! - [`parser`]: the textual input format.
//!
//! All types are generic over a [`Scalar`] coefficient field. The aliases
//! below fix it to [`Rational`], which is what the algorithms are meant for.

pub mod error;
pub mod parser;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod upops;

pub use error::{Error, Result};
pub use poly::{Degree, HomPoly, Monomial, SparsePoly, VarSet};
pub use roots::{rational_roots, RationalRoots};
pub use scalar::{rat, ratio, Rational, Scalar};
pub use series::{DisplayStyle, Order, PowerSeries};
pub use upops::{FactorizationResult, HenselFactor, Upops, WeierstrassFactors};

/// Multivariate polynomial over the rationals.
pub type MultiPoly = SparsePoly<Rational>;
/// Homogeneous polynomial over the rationals.
pub type QHomPoly = HomPoly<Rational>;
/// Power series over the rationals.
pub type Series = PowerSeries<Rational>;
/// Univariate polynomial over rational power series.
pub type QUpops = Upops<Rational>;

/// Power series with `f64` coefficients. Inexact: zero tests are exact float
/// comparisons.
pub type SeriesF64 = PowerSeries<f64>;
pub type MultiPolyF64 = SparsePoly<f64>;
