//! Lazily evaluated multivariate power series.
//!
//! A series is a node holding a *recipe* (how to produce its degree-`d`
//! homogeneous part), shared handles to the series the recipe reads (its
//! ancestors), and an append-only cache of the parts produced so far. Every
//! arithmetic operation builds a new node without computing anything;
//! parts are produced on demand by [`PowerSeries::homogeneous_part`], in
//! ascending degree, exactly once per node and degree.
//!
//! Nodes use `Rc`/`RefCell` and are confined to one thread.

use std::cell::{Cell, RefCell};
use std::fmt;
use std::rc::{Rc, Weak};

use crate::error::{Error, Result};
use crate::poly::{HomPoly, Monomial, SparsePoly, VarSet};
use crate::scalar::Scalar;

/// Shared handle to a lazily evaluated power series node.
///
/// Cloning the handle shares the node; it never copies the cache.
pub struct PowerSeries<C>(Rc<Node<C>>);

impl<C> Clone for PowerSeries<C> {
    fn clone(&self) -> Self {
        PowerSeries(Rc::clone(&self.0))
    }
}

/// Non-owning handle, used by shared updates to reach the nodes they fill.
pub(crate) struct WeakSeries<C>(Weak<Node<C>>);

impl<C> WeakSeries<C> {
    pub(crate) fn upgrade(&self) -> Option<PowerSeries<C>> {
        self.0.upgrade().map(PowerSeries)
    }
}

struct Node<C> {
    vars: VarSet,
    cache: RefCell<Vec<Rc<HomPoly<C>>>>,
    recipe: Recipe<C>,
    hints: Hints,
    label: Option<Rc<str>>,
    calls: Cell<u64>,
    // degree currently being produced, for the well-foundedness check
    generating: Cell<Option<u32>>,
}

/// Degrees outside `min_order..=max_degree` are known to be zero without
/// consulting the recipe.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Hints {
    pub min_order: u32,
    pub max_degree: Option<u32>,
}

impl Hints {
    pub(crate) const NONE: Hints = Hints {
        min_order: 0,
        max_degree: None,
    };

    fn known_zero(&self, d: u32) -> bool {
        d < self.min_order || self.max_degree.is_some_and(|m| d > m)
    }
}

/// Generator shared by several nodes; it fills the caches of all of them at
/// once. Used by Weierstrass preparation.
pub(crate) trait SharedUpdate {
    /// Ensures every node served by this update has degree `d` cached.
    fn advance_to(&self, d: u32) -> Result<()>;
}

struct SumTerm<C> {
    // homogeneous components of the polynomial multiplier, `None` for 1
    coeff: Option<Vec<HomPoly<C>>>,
    series: PowerSeries<C>,
}

enum Recipe<C> {
    Polynomial(SparsePoly<C>),
    Custom(Box<dyn Fn(u32) -> SparsePoly<C>>),
    Geometric(SparsePoly<C>),
    AllMonomials,
    Sum(Vec<SumTerm<C>>),
    Negate(PowerSeries<C>),
    Product(PowerSeries<C>, PowerSeries<C>),
    Quotient(PowerSeries<C>, PowerSeries<C>),
    /// Cache written directly by a [`SharedUpdate`]; has no generator.
    Manual,
    Derived(Rc<dyn SharedUpdate>),
}

/// Result of [`PowerSeries::order`]. A lazy series can only be proven zero up
/// to a finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Exact(u32),
    ZeroThrough(u32),
}

/// Output limits for [`PowerSeries::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplayStyle {
    pub max_terms: usize,
    pub max_degree_shown: u32,
    /// Append the analytic label, when the series has one.
    pub show_label: bool,
}

impl Default for DisplayStyle {
    fn default() -> Self {
        DisplayStyle {
            max_terms: 64,
            max_degree_shown: 5,
            show_label: false,
        }
    }
}

impl DisplayStyle {
    pub fn with_degree(max_degree_shown: u32) -> Self {
        DisplayStyle {
            max_degree_shown,
            ..Self::default()
        }
    }
}

fn paren(s: &str) -> String {
    format!("({s})")
}

impl<C: Scalar> PowerSeries<C> {
    fn from_parts(
        vars: &VarSet,
        recipe: Recipe<C>,
        hints: Hints,
        label: Option<Rc<str>>,
        cache: Vec<Rc<HomPoly<C>>>,
    ) -> Self {
        PowerSeries(Rc::new(Node {
            vars: vars.clone(),
            cache: RefCell::new(cache),
            recipe,
            hints,
            label,
            calls: Cell::new(0),
            generating: Cell::new(None),
        }))
    }

    /// The series whose homogeneous parts are those of `p`.
    ///
    /// Parts `0..=deg p` are cached immediately.
    pub fn from_polynomial(p: SparsePoly<C>) -> Self {
        let hints = Hints {
            min_order: p.min_degree().unwrap_or(u32::MAX),
            max_degree: Some(p.total_degree().finite().unwrap_or(0)),
        };
        let cache = p.homogeneous_components().into_iter().map(Rc::new).collect();
        let label = Some(Rc::from(p.to_string()));
        Self::from_parts(&p.vars().clone(), Recipe::Polynomial(p), hints, label, cache)
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        Self::from_polynomial(SparsePoly::constant(vars, c))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_polynomial(SparsePoly::zero(vars))
    }

    /// A series defined by a function producing its degree-`d` part.
    ///
    /// Nothing is evaluated here. Each returned part is checked for
    /// homogeneity when it is produced.
    pub fn from_generator<F>(vars: &VarSet, generator: F, label: Option<&str>) -> Self
    where
        F: Fn(u32) -> SparsePoly<C> + 'static,
    {
        Self::from_parts(
            vars,
            Recipe::Custom(Box::new(generator)),
            Hints::NONE,
            label.map(Rc::from),
            Vec::new(),
        )
    }

    /// `1/(1 - X_1 - ... - X_n)`, with parts `(X_1 + ... + X_n)^d`.
    pub fn geometric(vars: &VarSet) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::EmptyVarSet);
        }
        let linear = SparsePoly::from_terms(
            vars,
            (0..vars.len()).map(|i| (Monomial::var(vars.len(), i), C::one())),
        );
        let label = format!("1/(1 - {})", vars.names().join(" - "));
        Ok(Self::from_parts(
            vars,
            Recipe::Geometric(linear),
            Hints::NONE,
            Some(label.into()),
            Vec::new(),
        ))
    }

    /// The series with every monomial having coefficient one.
    pub fn sum_of_all_monomials(vars: &VarSet) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::EmptyVarSet);
        }
        let label = vars
            .names()
            .iter()
            .map(|v| format!("(1 - {v})"))
            .collect::<Vec<_>>()
            .join("*");
        Ok(Self::from_parts(
            vars,
            Recipe::AllMonomials,
            Hints::NONE,
            Some(format!("1/({label})").into()),
            Vec::new(),
        ))
    }

    pub(crate) fn manual(vars: &VarSet, hints: Hints, cache: Vec<Rc<HomPoly<C>>>) -> Self {
        Self::from_parts(vars, Recipe::Manual, hints, None, cache)
    }

    pub(crate) fn derived(
        vars: &VarSet,
        update: Rc<dyn SharedUpdate>,
        hints: Hints,
        cache: Vec<Rc<HomPoly<C>>>,
    ) -> Self {
        Self::from_parts(vars, Recipe::Derived(update), hints, None, cache)
    }

    /// Appends the next part to a node's cache. Only for nodes filled by a
    /// [`SharedUpdate`].
    pub(crate) fn push_part(&self, part: Rc<HomPoly<C>>) {
        let mut cache = self.0.cache.borrow_mut();
        assert_eq!(part.degree() as usize, cache.len(), "parts must be appended in order");
        cache.push(part);
    }

    pub(crate) fn downgrade(&self) -> WeakSeries<C> {
        WeakSeries(Rc::downgrade(&self.0))
    }

    pub fn vars(&self) -> &VarSet {
        &self.0.vars
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    /// Highest degree cached so far, `-1` when nothing is cached.
    pub fn precision(&self) -> i64 {
        self.0.cache.borrow().len() as i64 - 1
    }

    /// Number of times this node's recipe has been invoked.
    pub fn generator_calls(&self) -> u64 {
        self.0.calls.get()
    }

    /// Identity of the underlying node.
    pub fn node_id(&self) -> usize {
        Rc::as_ptr(&self.0) as *const () as usize
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }

    /// The series this node's recipe reads.
    pub fn ancestors(&self) -> Vec<PowerSeries<C>> {
        match &self.0.recipe {
            Recipe::Sum(terms) => terms.iter().map(|t| t.series.clone()).collect(),
            Recipe::Negate(f) => vec![f.clone()],
            Recipe::Product(a, b) | Recipe::Quotient(a, b) => vec![a.clone(), b.clone()],
            _ => Vec::new(),
        }
    }

    /// True when the series is the zero polynomial by construction.
    pub fn is_known_zero(&self) -> bool {
        matches!(&self.0.recipe, Recipe::Polynomial(p) if p.is_zero())
    }

    /// The polynomial this series was built from, if any.
    pub fn as_polynomial(&self) -> Option<&SparsePoly<C>> {
        match &self.0.recipe {
            Recipe::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub(crate) fn hints(&self) -> Hints {
        self.0.hints
    }

    fn cached(&self, d: u32) -> Option<Rc<HomPoly<C>>> {
        self.0.cache.borrow().get(d as usize).cloned()
    }

    /// The degree-`d` homogeneous part.
    ///
    /// Cached parts are returned without touching the recipe. Otherwise the
    /// recipe runs for every missing degree up to `d`, in order.
    pub fn homogeneous_part(&self, d: u32) -> Result<Rc<HomPoly<C>>> {
        if let Some(p) = self.cached(d) {
            return Ok(p);
        }
        let node = &*self.0;
        if let Some(g) = node.generating.get() {
            assert!(
                d < g,
                "series recipe requested degree {d} of itself while producing degree {g}"
            );
        }
        let start = node.cache.borrow().len() as u32;
        for k in start..=d {
            if node.cache.borrow().len() as u32 > k {
                // filled as a side effect of a shared update
                continue;
            }
            if node.hints.known_zero(k) {
                node.cache.borrow_mut().push(Rc::new(HomPoly::zero(&node.vars, k)));
                continue;
            }
            node.calls.set(node.calls.get() + 1);
            let outer = node.generating.replace(Some(k));
            let produced = self.generate(k);
            node.generating.set(outer);
            match produced? {
                Some(part) => node.cache.borrow_mut().push(Rc::new(part)),
                None => assert!(
                    node.cache.borrow().len() as u32 > k,
                    "shared update did not produce degree {k}"
                ),
            }
        }
        Ok(self.cached(d).expect("degree just produced"))
    }

    fn generate(&self, k: u32) -> Result<Option<HomPoly<C>>> {
        let vars = &self.0.vars;
        let part = match &self.0.recipe {
            Recipe::Polynomial(p) => p.homogeneous_component(k),
            Recipe::Custom(g) => {
                let p = g(k);
                if p.vars() != vars {
                    return Err(Error::VarSetMismatch);
                }
                HomPoly::new(k, p)?
            }
            Recipe::Geometric(linear) => {
                if k == 0 {
                    HomPoly::new_unchecked(0, SparsePoly::one(vars))
                } else {
                    let prev = self.cached(k - 1).expect("previous degree cached");
                    HomPoly::new_unchecked(k, prev.mul_unchecked(linear))
                }
            }
            Recipe::AllMonomials => {
                let terms = monomials_of_degree(vars.len(), k)
                    .into_iter()
                    .map(|m| (m, C::one()));
                HomPoly::new_unchecked(k, SparsePoly::from_terms(vars, terms))
            }
            Recipe::Sum(terms) => {
                let mut acc = SparsePoly::zero(vars);
                for term in terms {
                    match &term.coeff {
                        None => {
                            let part = term.series.homogeneous_part(k)?;
                            if !part.is_zero() {
                                acc = acc.try_add(&part)?;
                            }
                        }
                        Some(coeff_parts) => {
                            let hints = term.series.hints();
                            for cp in coeff_parts.iter().filter(|c| !c.is_zero()) {
                                let j = cp.degree();
                                if j > k || hints.known_zero(k - j) {
                                    continue;
                                }
                                let part = term.series.homogeneous_part(k - j)?;
                                if !part.is_zero() {
                                    acc = acc.try_add(&cp.mul_unchecked(&part))?;
                                }
                            }
                        }
                    }
                }
                HomPoly::new_unchecked(k, acc)
            }
            Recipe::Negate(f) => HomPoly::new_unchecked(k, -f.homogeneous_part(k)?.as_poly()),
            Recipe::Product(a, b) => {
                let (ha, hb) = (a.hints(), b.hints());
                let mut acc = SparsePoly::zero(vars);
                let lo = ha.min_order.max(k.saturating_sub(hb.max_degree.unwrap_or(u32::MAX)));
                let hi = k.saturating_sub(hb.min_order).min(ha.max_degree.unwrap_or(u32::MAX));
                if hb.min_order <= k {
                    for i in lo..=hi {
                        let pa = a.homogeneous_part(i)?;
                        if pa.is_zero() {
                            continue;
                        }
                        let pb = b.homogeneous_part(k - i)?;
                        if !pb.is_zero() {
                            acc = acc.try_add(&pa.mul_unchecked(&pb))?;
                        }
                    }
                }
                HomPoly::new_unchecked(k, acc)
            }
            Recipe::Quotient(f, g) => {
                // q_k = (f_k - sum_{i=1..k} g_i q_{k-i}) / g_0
                let g0 = g.homogeneous_part(0)?.constant_term();
                let mut acc = f.homogeneous_part(k)?.as_poly().clone();
                let hg = g.hints();
                let top = k.min(hg.max_degree.unwrap_or(u32::MAX));
                for i in hg.min_order.max(1)..=top {
                    let gi = g.homogeneous_part(i)?;
                    if gi.is_zero() {
                        continue;
                    }
                    let q = self.cached(k - i).expect("lower quotient degrees cached");
                    if !q.is_zero() {
                        acc = acc.try_sub(&gi.mul_unchecked(&q))?;
                    }
                }
                HomPoly::new_unchecked(k, acc.div_scalar(&g0)?)
            }
            Recipe::Manual => panic!("manually filled series read at degree {k} before it was written"),
            Recipe::Derived(update) => {
                update.advance_to(k)?;
                return Ok(None);
            }
        };
        Ok(Some(part))
    }

    /// Polynomial part through degree `d`.
    pub fn truncate(&self, d: u32) -> Result<SparsePoly<C>> {
        let mut acc = SparsePoly::zero(self.vars());
        for k in 0..=d {
            let part = self.homogeneous_part(k)?;
            if !part.is_zero() {
                acc = acc.try_add(&part)?;
            }
        }
        Ok(acc)
    }

    /// Forces the cache through degree `d`.
    pub fn update_precision(&self, d: u32) -> Result<()> {
        self.homogeneous_part(d).map(|_| ())
    }

    /// Coefficient of `m`, computing the part of degree `deg m` if needed.
    pub fn get_coefficient(&self, m: &Monomial) -> Result<C> {
        if m.nvars() != self.vars().len() {
            return Err(Error::VarSetMismatch);
        }
        Ok(self.homogeneous_part(m.degree())?.coefficient(m))
    }

    /// Smallest degree `<= bound` with a nonzero part.
    pub fn order(&self, bound: u32) -> Result<Order> {
        for d in 0..=bound {
            if !self.homogeneous_part(d)?.is_zero() {
                return Ok(Order::Exact(d));
            }
        }
        Ok(Order::ZeroThrough(bound))
    }

    /// `sum_i coeffs[i] * terms[i]`, or the plain sum when `coeffs` is `None`.
    pub fn add_many(terms: &[PowerSeries<C>], coeffs: Option<&[SparsePoly<C>]>) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptyList)?;
        let vars = first.vars().clone();
        if terms.iter().any(|t| t.vars() != &vars) {
            return Err(Error::VarSetMismatch);
        }
        if let Some(cs) = coeffs {
            if cs.len() != terms.len() {
                return Err(Error::LengthMismatch {
                    expected: terms.len(),
                    got: cs.len(),
                });
            }
            if cs.iter().any(|c| c.vars() != &vars) {
                return Err(Error::VarSetMismatch);
            }
        }
        let mut sum_terms = Vec::with_capacity(terms.len());
        let mut min_order = u32::MAX;
        let mut max_degree = Some(0u32);
        let mut labels = Some(Vec::new());
        for (i, f) in terms.iter().enumerate() {
            let coeff = coeffs.map(|cs| &cs[i]);
            if coeff.is_some_and(|c| c.is_zero()) {
                continue;
            }
            let h = f.hints();
            let (cmin, cmax) = match coeff {
                Some(c) => (
                    c.min_degree().unwrap_or(0),
                    c.total_degree().finite().unwrap_or(0),
                ),
                None => (0, 0),
            };
            min_order = min_order.min(h.min_order.saturating_add(cmin));
            max_degree = match (max_degree, h.max_degree) {
                (Some(m), Some(fm)) => Some(m.max(fm + cmax)),
                _ => None,
            };
            labels = match (labels, f.label()) {
                (Some(mut ls), Some(l)) => {
                    ls.push(match coeff {
                        Some(c) if !c.is_one() => format!("{}*{}", paren(&c.to_string()), paren(l)),
                        _ => paren(l),
                    });
                    Some(ls)
                }
                _ => None,
            };
            sum_terms.push(SumTerm {
                coeff: coeff.filter(|c| !c.is_one()).map(|c| c.homogeneous_components()),
                series: f.clone(),
            });
        }
        let hints = Hints {
            min_order,
            max_degree,
        };
        let label = labels.map(|ls| Rc::from(if ls.is_empty() { "0".to_string() } else { ls.join(" + ") }));
        Ok(Self::from_parts(&vars, Recipe::Sum(sum_terms), hints, label, Vec::new()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::add_many(&[self.clone(), other.clone()], None)
    }

    pub fn negate(&self) -> Self {
        let label = self.label().map(|l| Rc::from(format!("-{}", paren(l))));
        Self::from_parts(self.vars(), Recipe::Negate(self.clone()), self.hints(), label, Vec::new())
    }

    pub fn subtract(&self, other: &Self) -> Result<Self> {
        let vars = self.vars();
        let coeffs = [SparsePoly::one(vars), SparsePoly::constant(vars, -C::one())];
        Self::add_many(&[self.clone(), other.clone()], Some(&coeffs))
    }

    /// Product of all `factors`, built as a left-nested chain of binary
    /// product nodes so every partial product is cached once.
    pub fn mul_many(factors: &[PowerSeries<C>]) -> Result<Self> {
        let (first, rest) = factors.split_first().ok_or(Error::EmptyList)?;
        let mut acc = first.clone();
        for f in rest {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.vars() != other.vars() {
            return Err(Error::VarSetMismatch);
        }
        let (ha, hb) = (self.hints(), other.hints());
        let hints = Hints {
            min_order: ha.min_order.saturating_add(hb.min_order),
            max_degree: ha.max_degree.zip(hb.max_degree).map(|(a, b)| a + b),
        };
        let label = match (self.label(), other.label()) {
            (Some(a), Some(b)) => Some(Rc::from(format!("{}*{}", paren(a), paren(b)))),
            _ => None,
        };
        Ok(Self::from_parts(
            self.vars(),
            Recipe::Product(self.clone(), other.clone()),
            hints,
            label,
            Vec::new(),
        ))
    }

    /// `f / g`. Forces degree 0 of `g` to check that it is a unit and caches
    /// degree 0 of the quotient.
    pub fn divide(f: &Self, g: &Self) -> Result<Self> {
        if f.vars() != g.vars() {
            return Err(Error::VarSetMismatch);
        }
        let g0 = g.homogeneous_part(0)?.constant_term();
        if g0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let fh = f.hints();
        let q0 = if fh.known_zero(0) {
            HomPoly::zero(f.vars(), 0)
        } else {
            HomPoly::new_unchecked(0, f.homogeneous_part(0)?.div_scalar(&g0)?)
        };
        let hints = Hints {
            min_order: fh.min_order,
            max_degree: None,
        };
        let label = match (f.label(), g.label()) {
            (Some(a), Some(b)) => Some(Rc::from(format!("{}/{}", paren(a), paren(b)))),
            _ => None,
        };
        Ok(Self::from_parts(
            f.vars(),
            Recipe::Quotient(f.clone(), g.clone()),
            hints,
            label,
            vec![Rc::new(q0)],
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::divide(&Self::one(self.vars()), self)
    }

    /// `f^n`; negative `n` requires a unit and means `(1/f)^|n|`.
    pub fn exponentiate(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::one(self.vars()));
        }
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut m = n.unsigned_abs();
        let mut acc: Option<Self> = None;
        while m > 0 {
            if m & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base)?,
                });
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc.expect("n != 0"))
    }

    /// Text rendering in ascending degree with a big-O tail, e.g.
    /// `1 + x + y + O(deg 2)`. Exact polynomials that fit are shown without
    /// a tail.
    pub fn render(&self, style: &DisplayStyle) -> Result<String> {
        let mut parts = Vec::new();
        let mut shown = 0usize;
        let mut cut = false;
        for d in 0..=style.max_degree_shown {
            let part = self.homogeneous_part(d)?;
            if shown + part.num_terms() > style.max_terms {
                let room = style.max_terms - shown;
                parts.push((part, room));
                cut = true;
                break;
            }
            shown += part.num_terms();
            let n = part.num_terms();
            parts.push((part, n));
        }
        let terms = parts
            .iter()
            .flat_map(|(p, n)| p.terms().rev().take(*n));
        let mut out = String::new();
        SparsePoly::<C>::write_terms(&mut out, self.vars(), terms).expect("writing to a String");
        let exact = !cut
            && matches!(&self.0.recipe, Recipe::Polynomial(p)
                if !p.is_zero() && p.total_degree().finite().unwrap_or(0) <= style.max_degree_shown);
        if cut {
            out.push_str(" + ...");
        }
        if !exact {
            out.push_str(&format!(" + O(deg {})", style.max_degree_shown + 1));
        }
        if style.show_label {
            if let Some(l) = self.label() {
                out.push_str(&format!("  [= {l}]"));
            }
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render(&DisplayStyle::default()) {
            Ok(s) => f.write_str(&s),
            Err(e) => write!(f, "<error: {e}>"),
        }
    }
}

impl<C: Scalar> fmt::Debug for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerSeries")
            .field("vars", self.vars())
            .field("precision", &self.precision())
            .field("label", &self.label())
            .finish()
    }
}

/// All exponent vectors over `nvars` variables with total degree `d`.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}
