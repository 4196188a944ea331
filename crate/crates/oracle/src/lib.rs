//! Truncated power series: polynomials computed modulo all monomials of
//! degree above a fixed cap.
//!
//! Used by the tests of `mps-core` as a reference for its lazy series. Only
//! the polynomial layer of `mps-core` is used here; all series arithmetic is
//! redone from scratch, with the inverse taken as a partial geometric sum.

use mps::{Monomial, MultiPoly, Rational, VarSet};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("truncation caps differ: {0} and {1}")]
    CapMismatch(u32, u32),
    #[error("constant term is zero")]
    NotInvertible,
    #[error("operands are defined over different variable sets")]
    VarSetMismatch,
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// A series known modulo terms of degree `> cap`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    cap: u32,
    poly: MultiPoly,
}

fn cut(vars: &VarSet, cap: u32, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> MultiPoly {
    MultiPoly::from_terms(vars, terms.into_iter().filter(|(m, _)| m.degree() <= cap))
}

impl TruncatedSeries {
    pub fn new(poly: &MultiPoly, cap: u32) -> Self {
        let terms = poly.terms().map(|(m, c)| (m.clone(), c.clone()));
        TruncatedSeries {
            cap,
            poly: cut(poly.vars(), cap, terms),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational, cap: u32) -> Self {
        Self::new(&MultiPoly::constant(vars, c), cap)
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(OracleError::CapMismatch(self.cap, other.cap));
        }
        if self.poly.vars() != other.poly.vars() {
            return Err(OracleError::VarSetMismatch);
        }
        Ok(())
    }
}

pub fn t_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check(b)?;
    let terms = a.poly.terms().chain(b.poly.terms()).map(|(m, c)| (m.clone(), c.clone()));
    Ok(TruncatedSeries {
        cap: a.cap,
        poly: cut(a.poly.vars(), a.cap, terms),
    })
}

pub fn t_neg(a: &TruncatedSeries) -> TruncatedSeries {
    let terms = a.poly.terms().map(|(m, c)| (m.clone(), -c.clone()));
    TruncatedSeries {
        cap: a.cap,
        poly: cut(a.poly.vars(), a.cap, terms),
    }
}

pub fn t_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    t_add(a, &t_neg(b))
}

/// Schoolbook product, skipping pairs whose degrees overflow the cap.
pub fn t_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check(b)?;
    let mut terms = Vec::new();
    for (ma, ca) in a.poly.terms() {
        for (mb, cb) in b.poly.terms() {
            if ma.degree() + mb.degree() <= a.cap {
                terms.push((ma.mul(mb), ca.clone() * cb));
            }
        }
    }
    Ok(TruncatedSeries {
        cap: a.cap,
        poly: MultiPoly::from_terms(a.poly.vars(), terms),
    })
}

/// `c^-1 (1 + g + ... + g^cap)` with `c` the constant term and
/// `g = 1 - f/c`. Since `g` has no constant term, `g^(cap+1)` vanishes.
pub fn t_inverse(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c = a.poly.constant_term();
    if c.is_zero() {
        return Err(OracleError::NotInvertible);
    }
    let vars = a.poly.vars();
    let c_inv = Rational::one() / c;
    let one = TruncatedSeries::constant(vars, Rational::one(), a.cap);
    let scaled = TruncatedSeries::new(&a.poly.scale(&c_inv), a.cap);
    let g = t_sub(&one, &scaled)?;
    let mut sum = one.clone();
    let mut power = one;
    for _ in 0..a.cap {
        power = t_mul(&power, &g)?;
        sum = t_add(&sum, &power)?;
    }
    Ok(TruncatedSeries::new(&sum.poly.scale(&c_inv), a.cap))
}

pub fn t_div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check(b)?;
    t_mul(a, &t_inverse(b)?)
}

/// Random polynomial with at most `nterms` terms of degree `<= max_degree`
/// and integer coefficients in `-range..=range`, scaled by `1/den` for a
/// random `den` in `1..=max_den`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    vars: &VarSet,
    max_degree: u32,
    nterms: usize,
    range: i64,
    max_den: i64,
) -> MultiPoly {
    let n = vars.len();
    let terms = (0..nterms).map(|_| {
        let total = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n];
        if n > 0 {
            for _ in 0..total {
                exps[rng.gen_range(0..n)] += 1;
            }
        }
        let num = BigInt::from(rng.gen_range(-range..=range));
        let den = BigInt::from(rng.gen_range(1..=max_den.max(1)));
        (Monomial::new(exps), Rational::new(num, den))
    });
    MultiPoly::from_terms(vars, terms.collect::<Vec<_>>())
}

/// [`random_poly`] with a nonzero constant term.
pub fn random_unit<R: Rng>(rng: &mut R, vars: &VarSet, max_degree: u32, nterms: usize, range: i64) -> MultiPoly {
    let p = random_poly(rng, vars, max_degree, nterms, range, 3);
    let c0 = p.constant_term();
    let mut shift = BigInt::from(rng.gen_range(1..=range.max(1)));
    if rng.gen_bool(0.5) {
        shift = -shift;
    }
    let target = Rational::from_integer(shift);
    p.try_add(&MultiPoly::constant(vars, target - c0)).expect("same variables")
}
