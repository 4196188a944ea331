//! Lazy Weierstrass preparation.
//!
//! For `f = a_0 + ... + a_{d+m} Y^{d+m}` with `a_d` the first unit
//! coefficient, we solve `f = p * alpha` where
//! `p = Y^d + b_{d-1} Y^{d-1} + ... + b_0` has every `b_i` in the maximal
//! ideal and `alpha = c_0 + ... + c_m Y^m` has `c_0` a unit. Equating
//! coefficients gives
//!
//! ```text
//! a_i     = sum_{j<=i} b_j c_{i-j}            (i < d)
//! a_{d+l} = c_l + sum_{j<d} b_j c_{d+l-j}      (0 <= l <= m, c_k = 0 for k > m)
//! ```
//!
//! Both systems are solved one homogeneous degree at a time. Going from
//! degree `r - 1` to `r` is a single *round* that updates every `b_i` and
//! `c_l` together:
//!
//! 1. for `i = 0..d` in order,
//!    `b_i[r] = (F_i[r] - sum_{k=1}^{r-1} b_i[r-k] c_0[k]) / c_0[0]`
//!    where `F_i = a_i - sum_{j<i} b_j c_{i-j}`;
//! 2. force `c_l[r]` for `l = 0..=m`, each `c_l` being the lazy series
//!    `a_{d+l} - sum_j b_j c_{d+l-j}`.
//!
//! Because every `b_j` has order at least one, the degree-`r` parts read in
//! step 1 only involve `c`'s of degree below `r` and `b_j[r]` for `j < i`,
//! and step 2 only involves `b`'s up to degree `r` (all known) and higher
//! `c`'s of degree below `r`.
//!
//! The `b_i` are stored in nodes written directly by the round; `F_i` and
//! `c_l` are ordinary lazy sums and products of those nodes. What the caller
//! receives are separate handles whose recipe is "run rounds until this
//! degree exists", so requesting any degree of any coefficient of `p` or
//! `alpha` advances all of them.

use std::cell::{Cell, OnceCell};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::poly::{HomPoly, SparsePoly, VarSet};
use crate::scalar::Scalar;
use crate::series::{Hints, PowerSeries, SharedUpdate, WeakSeries};

use super::Upops;

/// `f = p * alpha` with `p` monic of degree `d` and `alpha` of degree `m`
/// with unit constant coefficient.
#[derive(Clone, Debug)]
pub struct WeierstrassFactors<C: Scalar> {
    pub p: Upops<C>,
    pub alpha: Upops<C>,
    pub d: usize,
    pub m: usize,
}

struct WeierstrassState<C> {
    vars: VarSet,
    // written by rounds only
    b: Vec<PowerSeries<C>>,
    // lazy compositions of `a`, `b` and higher `c`
    c: Vec<PowerSeries<C>>,
    helpers: Vec<PowerSeries<C>>,
    b_out: OnceCell<Vec<WeakSeries<C>>>,
    c_out: OnceCell<Vec<WeakSeries<C>>>,
    // every b, c (inner and outer) has degrees 0..=frontier cached
    frontier: Cell<u32>,
    busy: Cell<bool>,
}

impl<C: Scalar> WeierstrassState<C> {
    fn round(&self, r: u32) -> Result<()> {
        let c0 = &self.c[0];
        let unit = c0.homogeneous_part(0)?.constant_term();
        for (bi, fi) in self.b.iter().zip(&self.helpers) {
            let mut acc = fi.homogeneous_part(r)?.as_poly().clone();
            for k in 1..r {
                let low = bi.homogeneous_part(r - k)?;
                if low.is_zero() {
                    continue;
                }
                let ck = c0.homogeneous_part(k)?;
                if !ck.is_zero() {
                    acc = acc.try_sub(&low.mul_unchecked(&ck))?;
                }
            }
            let part = HomPoly::new(r, acc.div_scalar(&unit)?).expect("homogeneous by construction");
            bi.push_part(Rc::new(part));
        }
        for cl in &self.c {
            cl.homogeneous_part(r)?;
        }
        self.publish(r)
    }

    fn publish(&self, r: u32) -> Result<()> {
        let outs = [(&self.b, self.b_out.get()), (&self.c, self.c_out.get())];
        for (inner, outer) in outs {
            for (src, dst) in inner.iter().zip(outer.into_iter().flatten()) {
                if let Some(dst) = dst.upgrade() {
                    dst.push_part(src.homogeneous_part(r)?);
                }
            }
        }
        Ok(())
    }
}

impl<C: Scalar> SharedUpdate for WeierstrassState<C> {
    fn advance_to(&self, d: u32) -> Result<()> {
        if d <= self.frontier.get() {
            return Ok(());
        }
        assert!(!self.busy.replace(true), "re-entrant Weierstrass update");
        let mut res = Ok(());
        for r in self.frontier.get() + 1..=d {
            res = self.round(r);
            if res.is_err() {
                break;
            }
            self.frontier.set(r);
        }
        self.busy.set(false);
        res
    }
}

impl<C: Scalar> Upops<C> {
    /// Weierstrass preparation `f = p * alpha`.
    ///
    /// `d` is the index of the first coefficient with nonzero constant term;
    /// only constant terms are inspected to find it. With `d = 0`, `p = 1`
    /// and `alpha = f`. The returned factors are lazy with degree 0 known.
    pub fn weierstrass_preparation(&self) -> Result<WeierstrassFactors<C>> {
        let vars = self.vars.clone();
        let mut d = None;
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.homogeneous_part(0)?.constant_term().is_zero() {
                d = Some(i);
                break;
            }
        }
        let d = d.ok_or(Error::NotPrepared)?;
        let m = self.coeffs.len() - 1 - d;
        let one = PowerSeries::one(&vars);
        if d == 0 {
            return Ok(WeierstrassFactors {
                p: self.with_coeffs(vec![one]),
                alpha: self.clone(),
                d,
                m,
            });
        }

        let a = &self.coeffs;
        let b_hints = Hints {
            min_order: 1,
            max_degree: None,
        };
        let zero0 = || Rc::new(HomPoly::zero(&vars, 0));
        let b: Vec<PowerSeries<C>> = (0..d)
            .map(|_| PowerSeries::manual(&vars, b_hints, vec![zero0()]))
            .collect();
        let neg_one = SparsePoly::constant(&vars, -C::one());
        let unit_coeff = SparsePoly::one(&vars);

        // a_k - sum of products, as one m-ary sum
        let difference = |ak: &PowerSeries<C>, products: Vec<PowerSeries<C>>| -> Result<PowerSeries<C>> {
            if products.is_empty() {
                return Ok(ak.clone());
            }
            let mut terms = vec![ak.clone()];
            let mut coeffs = vec![unit_coeff.clone()];
            for p in products {
                terms.push(p);
                coeffs.push(neg_one.clone());
            }
            PowerSeries::add_many(&terms, Some(&coeffs))
        };

        // c_m down to c_0
        let mut c: Vec<Option<PowerSeries<C>>> = vec![None; m + 1];
        for l in (0..=m).rev() {
            let mut products = Vec::new();
            for (j, bj) in b.iter().enumerate() {
                let idx = d + l - j;
                if idx <= m {
                    let ci = c[idx].as_ref().expect("higher c built first");
                    products.push(bj.mul(ci)?);
                }
            }
            c[l] = Some(difference(&a[d + l], products)?);
        }
        let c: Vec<PowerSeries<C>> = c.into_iter().map(|x| x.expect("built")).collect();

        let mut helpers = Vec::with_capacity(d);
        for (i, ai) in a.iter().enumerate().take(d) {
            let mut products = Vec::new();
            for (j, bj) in b.iter().enumerate().take(i) {
                if let Some(ci) = c.get(i - j) {
                    products.push(bj.mul(ci)?);
                }
            }
            helpers.push(difference(ai, products)?);
        }

        let state = Rc::new(WeierstrassState {
            vars: vars.clone(),
            b,
            c,
            helpers,
            b_out: OnceCell::new(),
            c_out: OnceCell::new(),
            frontier: Cell::new(0),
            busy: Cell::new(false),
        });
        let shared: Rc<dyn SharedUpdate> = state.clone();

        let b_pub: Vec<PowerSeries<C>> = (0..d)
            .map(|_| PowerSeries::derived(&state.vars, Rc::clone(&shared), b_hints, vec![zero0()]))
            .collect();
        let c_pub = state
            .c
            .iter()
            .map(|ci| {
                let c0 = ci.homogeneous_part(0)?;
                Ok(PowerSeries::derived(&state.vars, Rc::clone(&shared), Hints::NONE, vec![c0]))
            })
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(!c_pub[0].homogeneous_part(0)?.constant_term().is_zero());
        let _ = state.b_out.set(b_pub.iter().map(|s| s.downgrade()).collect());
        let _ = state.c_out.set(c_pub.iter().map(|s| s.downgrade()).collect());

        let mut p_coeffs = b_pub;
        p_coeffs.push(one);
        Ok(WeierstrassFactors {
            p: self.with_coeffs(p_coeffs),
            alpha: self.with_coeffs(c_pub),
            d,
            m,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::parser::parse_poly;
    use crate::poly::{Degree, Monomial, VarSet};
    use crate::scalar::{rat, Rational};
    use crate::series::PowerSeries;
    use crate::upops::Upops;
    use crate::Error;

    fn up(text: &str, coeff_vars: &[&str], main: &str) -> Upops<Rational> {
        let mut all: Vec<&str> = coeff_vars.to_vec();
        all.push(main);
        let p = parse_poly(text, &VarSet::new(all).unwrap()).unwrap();
        Upops::from_polynomial(&p, main).unwrap()
    }

    /// Drops terms whose coefficient-variable degree exceeds `r`.
    fn clip(p: &crate::MultiPoly, r: u32) -> crate::MultiPoly {
        let n = p.vars().len() - 1;
        crate::MultiPoly::from_terms(
            p.vars(),
            p.terms()
                .filter(|(m, _)| m.exponents()[..n].iter().sum::<u32>() <= r)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    #[test]
    fn catalan_numbers() {
        let f = up("X2^2 + X2 + X1", &["X1"], "X2");
        let w = f.weierstrass_preparation().unwrap();
        assert_eq!((w.d, w.m), (1, 1));
        let b0 = w.p.coefficient(0).unwrap();
        let coeffs: Vec<Rational> = (1..=5)
            .map(|k| b0.get_coefficient(&Monomial::new(vec![k])).unwrap())
            .collect();
        assert_eq!(coeffs, [1, 1, 2, 5, 14].map(rat));
    }

    #[test]
    fn unit_constant_term_gives_trivial_p() {
        let f = up("X2^2 + X1*X2 + 1 + X1", &["X1"], "X2");
        let w = f.weierstrass_preparation().unwrap();
        assert_eq!(w.d, 0);
        assert_eq!(w.p.degree(), Degree::Finite(0));
        assert_eq!(w.p.truncate(5).unwrap().to_string(), "1");
        assert!(w.alpha.coefficients()[0].ptr_eq(&f.coefficients()[0]));
    }

    #[test]
    fn monic_input_is_its_own_p() {
        let f = up("X3^2 + X1*X3 + X2", &["X1", "X2"], "X3");
        let w = f.weierstrass_preparation().unwrap();
        assert_eq!((w.d, w.m), (2, 0));
        let prod = w.p.mul(&w.alpha).unwrap();
        for r in 0..10 {
            assert_eq!(clip(&prod.truncate(r).unwrap(), r), clip(&f.truncate(r).unwrap(), r));
        }
        assert_eq!(w.alpha.truncate(9).unwrap().to_string(), "1");
    }

    #[test]
    fn simultaneous_update() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let lead = PowerSeries::from_polynomial(parse_poly("1 + x + y", &v).unwrap())
            .inverse()
            .unwrap();
        let coeffs = vec![
            PowerSeries::from_polynomial(parse_poly("x", &v).unwrap()),
            PowerSeries::from_polynomial(parse_poly("y", &v).unwrap()),
            PowerSeries::one(&v),
            PowerSeries::one(&v),
            lead,
        ];
        let f = Upops::from_coefficients("Z", &v, coeffs).unwrap();
        let w = f.weierstrass_preparation().unwrap();
        assert_eq!((w.d, w.m), (2, 2));
        w.alpha.coefficient(1).unwrap().homogeneous_part(6).unwrap();
        for s in w.p.coefficients()[..2].iter().chain(w.alpha.coefficients()) {
            assert!(s.precision() >= 6);
        }
        let prod = w.p.mul(&w.alpha).unwrap();
        for r in [0, 3, 8] {
            assert_eq!(clip(&prod.truncate(r).unwrap(), r), clip(&f.truncate(r).unwrap(), r));
        }
    }

    #[test]
    fn dropping_p_keeps_alpha_usable() {
        let f = up("X2^3 + X2^2 + X1*X2 + X1^2", &["X1"], "X2");
        let w = f.weierstrass_preparation().unwrap();
        let alpha = w.alpha.clone();
        drop(w);
        alpha.update_precision(12).unwrap();
        assert!(alpha.precision() >= 12);
    }

    #[test]
    fn no_unit_coefficient() {
        let f = up("X1*X2^2 + X1^2", &["X1"], "X2");
        assert_eq!(f.weierstrass_preparation().unwrap_err(), Error::NotPrepared);
    }
}
