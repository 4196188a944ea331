//! Univariate polynomials over multivariate power series.
//!
//! A [`Upops`] is a dense array of [`PowerSeries`] coefficients in a main
//! variable that is not one of the coefficient variables. All arithmetic is
//! coefficient-wise series arithmetic, so it inherits laziness.

mod hensel;
mod taylor;
mod weierstrass;

use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::poly::{Degree, Monomial, SparsePoly, VarSet};
use crate::scalar::Scalar;
use crate::series::{DisplayStyle, PowerSeries};

pub use hensel::{FactorizationResult, HenselFactor};
pub use weierstrass::WeierstrassFactors;

#[derive(Clone)]
pub struct Upops<C> {
    main_var: Rc<str>,
    vars: VarSet,
    // a_0..a_k; never ends in a coefficient known to be zero
    coeffs: Vec<PowerSeries<C>>,
}

impl<C: Scalar> Upops<C> {
    /// Builds `sum_i coeffs[i] * main_var^i`. Trailing coefficients that are
    /// the zero polynomial are dropped.
    pub fn from_coefficients(main_var: &str, vars: &VarSet, mut coeffs: Vec<PowerSeries<C>>) -> Result<Self> {
        if vars.contains(main_var) {
            return Err(Error::VariableClash(main_var.to_string()));
        }
        if coeffs.iter().any(|c| c.vars() != vars) {
            return Err(Error::VarSetMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_known_zero()) {
            coeffs.pop();
        }
        Ok(Upops {
            main_var: Rc::from(main_var),
            vars: vars.clone(),
            coeffs,
        })
    }

    /// Same as [`Upops::from_coefficients`] with polynomial coefficients.
    pub fn from_polys(main_var: &str, vars: &VarSet, coeffs: Vec<SparsePoly<C>>) -> Result<Self> {
        let series = coeffs.into_iter().map(PowerSeries::from_polynomial).collect();
        Self::from_coefficients(main_var, vars, series)
    }

    /// Splits `p` by powers of `main_var`. The coefficient variables are the
    /// remaining variables of `p`.
    pub fn from_polynomial(p: &SparsePoly<C>, main_var: &str) -> Result<Self> {
        let Some((vars, idx)) = p.vars().without(main_var) else {
            return Self::from_polys(main_var, p.vars(), vec![p.clone()]);
        };
        let mut buckets: Vec<Vec<(Monomial, C)>> = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            let i = e[idx] as usize;
            if buckets.len() <= i {
                buckets.resize_with(i + 1, Vec::new);
            }
            let rest = e
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &x)| x)
                .collect();
            buckets[i].push((Monomial::new(rest), c.clone()));
        }
        let coeffs = buckets
            .into_iter()
            .map(|terms| SparsePoly::from_terms(&vars, terms))
            .collect();
        Self::from_polys(main_var, &vars, coeffs)
    }

    pub fn zero(main_var: &str, vars: &VarSet) -> Result<Self> {
        Self::from_coefficients(main_var, vars, Vec::new())
    }

    pub fn main_variable(&self) -> &str {
        &self.main_var
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n as u32 - 1),
        }
    }

    pub fn coefficients(&self) -> &[PowerSeries<C>] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Result<&PowerSeries<C>> {
        self.coeffs.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            degree: self.coeffs.len() as i64 - 1,
        })
    }

    pub fn leading_coefficient(&self) -> Option<&PowerSeries<C>> {
        self.coeffs.last()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.main_var != other.main_var {
            return Err(Error::VariableClash(other.main_var.to_string()));
        }
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch);
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<PowerSeries<C>>) -> Self {
        Upops {
            main_var: Rc::clone(&self.main_var),
            vars: self.vars.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) | (None, Some(a)) => Ok(a.clone()),
                (None, None) => unreachable!(),
            })
            .collect::<Result<_>>()?;
        Ok(self.with_coeffs(coeffs))
    }

    pub fn negate(&self) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a.negate()).collect())
    }

    pub fn subtract(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    /// Product by coefficient convolution; each result coefficient is one
    /// m-ary sum of binary products.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(self.with_coeffs(Vec::new()));
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let lo = k.saturating_sub(other.coeffs.len() - 1);
            let hi = k.min(self.coeffs.len() - 1);
            let products = (lo..=hi)
                .map(|i| self.coeffs[i].mul(&other.coeffs[k - i]))
                .collect::<Result<Vec<_>>>()?;
            coeffs.push(if products.len() == 1 {
                products.into_iter().next().unwrap()
            } else {
                PowerSeries::add_many(&products, None)?
            });
        }
        Ok(self.with_coeffs(coeffs))
    }

    /// Multiplies every coefficient by the series `s`.
    pub fn scale_by_series(&self, s: &PowerSeries<C>) -> Result<Self> {
        if s.vars() != &self.vars {
            return Err(Error::VarSetMismatch);
        }
        let coeffs = self.coeffs.iter().map(|a| a.mul(s)).collect::<Result<_>>()?;
        Ok(self.with_coeffs(coeffs))
    }

    /// Divides every coefficient by the unit `u`.
    pub fn divide_by_unit_series(&self, u: &PowerSeries<C>) -> Result<Self> {
        if u.vars() != &self.vars {
            return Err(Error::VarSetMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| PowerSeries::divide(a, u))
            .collect::<Result<_>>()?;
        Ok(self.with_coeffs(coeffs))
    }

    /// The variable set of [`Upops::truncate`]: coefficient variables
    /// followed by the main variable.
    pub fn full_vars(&self) -> VarSet {
        self.vars
            .with_appended(&self.main_var)
            .expect("main variable is not a coefficient variable")
    }

    /// `sum_i truncate(a_i, d) * main_var^i` as a polynomial in all variables.
    pub fn truncate(&self, d: u32) -> Result<SparsePoly<C>> {
        let full = self.full_vars();
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            let t = a.truncate(d)?;
            for (m, c) in t.terms() {
                let mut e = m.exponents().to_vec();
                e.push(i as u32);
                terms.push((Monomial::new(e), c.clone()));
            }
        }
        Ok(SparsePoly::from_terms(&full, terms))
    }

    /// Forces every coefficient through degree `d`.
    pub fn update_precision(&self, d: u32) -> Result<()> {
        self.coeffs.iter().try_for_each(|a| a.update_precision(d))
    }

    /// Common precision of the coefficients (their minimum), `-1` if some
    /// coefficient has nothing cached or the polynomial is zero.
    pub fn precision(&self) -> i64 {
        self.coeffs.iter().map(|a| a.precision()).min().unwrap_or(-1)
    }

    /// `f(0, ..., 0, main_var)`: only degree 0 of each coefficient is read.
    pub fn evaluate_at_origin(&self) -> Result<SparsePoly<C>> {
        let uni = VarSet::new([self.main_var.to_string()])?;
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            terms.push((Monomial::new(vec![i as u32]), a.homogeneous_part(0)?.constant_term()));
        }
        Ok(SparsePoly::from_terms(&uni, terms))
    }

    /// Descending powers of the main variable, each coefficient in series
    /// rendering, parenthesized unless it is a single term.
    pub fn render(&self, style: &DisplayStyle) -> Result<String> {
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_known_zero() {
                continue;
            }
            let s = a.render(style)?;
            let simple = !s.contains(' ');
            let power = match i {
                0 => None,
                1 => Some(self.main_var.to_string()),
                _ => Some(format!("{}^{i}", self.main_var)),
            };
            terms.push(match power {
                None if simple => s,
                None => format!("({s})"),
                Some(p) if s == "1" => p,
                Some(p) if simple && !s.starts_with('-') => format!("{s}*{p}"),
                Some(p) => format!("({s})*{p}"),
            });
        }
        if terms.is_empty() {
            return Ok("0".to_string());
        }
        Ok(terms.join(" + "))
    }
}

impl<C: Scalar> fmt::Display for Upops<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render(&DisplayStyle::default()) {
            Ok(s) => f.write_str(&s),
            Err(e) => write!(f, "<error: {e}>"),
        }
    }
}

impl<C: Scalar> fmt::Debug for Upops<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Upops")
            .field("main_var", &self.main_var)
            .field("vars", &self.vars)
            .field("degree", &self.degree())
            .finish()
    }
}
