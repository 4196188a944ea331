//! Sparse multivariate polynomials in canonical expanded form.
//!
//! A [`SparsePoly`] is a map from [`Monomial`] to a nonzero coefficient. The
//! map is ordered by graded lexicographic order over the declaration order of
//! the [`VarSet`], so structural equality is polynomial equality and
//! rendering is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ordered list of distinct variable names.
///
/// Cloning is cheap; two sets are equal when they list the same names in the
/// same order.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarSet(names.into()))
    }

    pub fn empty() -> Self {
        VarSet(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// This set followed by `name`.
    pub fn with_appended(&self, name: &str) -> Result<Self> {
        VarSet::new(self.0.iter().cloned().chain(std::iter::once(name.to_string())))
    }

    /// This set with `name` removed, plus the position it occupied.
    pub fn without(&self, name: &str) -> Option<(Self, usize)> {
        let idx = self.index_of(name)?;
        let rest = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, n)| n.clone())
            .collect::<Vec<_>>();
        Some((VarSet(rest.into()), idx))
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// Exponent vector `X^e`. Ordering is graded lexicographic: total degree
/// first, then exponents compared left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    // field order matters for the derived Ord
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    /// The constant monomial `1` over `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    /// The monomial `X_var` over `nvars` variables.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        Monomial { degree: 1, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn write<W: fmt::Write>(&self, f: &mut W, vars: &VarSet) -> fmt::Result {
        let mut first = true;
        for (name, &e) in vars.names().iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Total degree of a polynomial. The zero polynomial has degree
/// `MinusInfinity`, which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-infinity"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct SparsePoly<C> {
    vars: VarSet,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> SparsePoly<C> {
    pub fn zero(vars: &VarSet) -> Self {
        SparsePoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn variable(vars: &VarSet, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), idx), C::one());
        Ok(p)
    }

    /// Collects `(monomial, coefficient)` pairs, summing duplicates and
    /// dropping zeros. Every monomial must have `vars.len()` exponents.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity does not match variable set");
            p.accumulate(m, c);
        }
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    fn accumulate(&mut self, m: Monomial, c: C) {
        match self.terms.get_mut(&m) {
            Some(v) => *v += c,
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub fn total_degree(&self) -> Degree {
        // graded order: the last key has the largest total degree
        match self.terms.keys().next_back() {
            Some(m) => Degree::Finite(m.degree),
            None => Degree::MinusInfinity,
        }
    }

    /// Smallest total degree of a term, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), ca.clone() * cb);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// `self^n` by binary powering; `p^0 = 1`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c))
                .collect(),
        }
    }

    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() / c))
                .collect(),
        })
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> HomPoly<C> {
        let lo = Monomial {
            degree: d,
            exps: Vec::new(),
        };
        let terms = self
            .terms
            .range(lo..)
            .take_while(|(m, _)| m.degree == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        HomPoly {
            degree: d,
            poly: SparsePoly {
                vars: self.vars.clone(),
                terms,
            },
        }
    }

    /// All homogeneous components, indexed by degree `0..=total_degree`.
    pub fn homogeneous_components(&self) -> Vec<HomPoly<C>> {
        let top = match self.total_degree() {
            Degree::MinusInfinity => return Vec::new(),
            Degree::Finite(d) => d,
        };
        let mut parts: Vec<BTreeMap<Monomial, C>> = (0..=top).map(|_| BTreeMap::new()).collect();
        for (m, c) in &self.terms {
            parts[m.degree as usize].insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .enumerate()
            .map(|(d, terms)| HomPoly {
                degree: d as u32,
                poly: SparsePoly {
                    vars: self.vars.clone(),
                    terms,
                },
            })
            .collect()
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree == d)
    }

    /// Writes `terms` with the canonical sign and coefficient conventions.
    pub(crate) fn write_terms<'a, W, I>(f: &mut W, vars: &VarSet, terms: I) -> fmt::Result
    where
        W: fmt::Write,
        I: IntoIterator<Item = (&'a Monomial, &'a C)>,
    {
        let mut first = true;
        for (m, c) in terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            if m.degree == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write(f, vars)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Display for SparsePoly<C> {
    /// Canonical text: descending graded-lex order, e.g. `x^2 + 2*x*y + y^2 - 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Self::write_terms(f, &self.vars, self.terms.iter().rev())
    }
}

impl<C: Scalar> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[{}]({})", self.vars, self)
    }
}

impl<C: Scalar> Add for &SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.try_add(rhs).expect("variable sets differ")
    }
}

impl<C: Scalar> Sub for &SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.try_sub(rhs).expect("variable sets differ")
    }
}

impl<C: Scalar> Mul for &SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.try_mul(rhs).expect("variable sets differ")
    }
}

impl<C: Scalar> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;

    fn neg(self) -> SparsePoly<C> {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// A polynomial whose terms all have total degree `degree` (or zero).
#[derive(Clone, PartialEq)]
pub struct HomPoly<C> {
    degree: u32,
    poly: SparsePoly<C>,
}

impl<C: Scalar> HomPoly<C> {
    /// Checks homogeneity.
    pub fn new(degree: u32, poly: SparsePoly<C>) -> Result<Self> {
        if poly.is_homogeneous_of(degree) {
            Ok(HomPoly { degree, poly })
        } else {
            Err(Error::GeneratorDegreeMismatch { expected: degree })
        }
    }

    pub(crate) fn new_unchecked(degree: u32, poly: SparsePoly<C>) -> Self {
        debug_assert!(poly.is_homogeneous_of(degree));
        HomPoly { degree, poly }
    }

    pub fn zero(vars: &VarSet, degree: u32) -> Self {
        HomPoly {
            degree,
            poly: SparsePoly::zero(vars),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn as_poly(&self) -> &SparsePoly<C> {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePoly<C> {
        self.poly
    }
}

impl<C> Deref for HomPoly<C> {
    type Target = SparsePoly<C>;

    fn deref(&self) -> &SparsePoly<C> {
        &self.poly
    }
}

impl<C: Scalar> fmt::Display for HomPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl<C: Scalar> fmt::Debug for HomPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly<{}>({})", self.degree, self.poly)
    }
}
