//! Factorization by Hensel lifting.
//!
//! If `f` has unit leading coefficient `a_k` and `f/a_k` evaluated at the
//! origin splits as `prod (Y - c_i)^(k_i)`, then `f = a_k * prod f_i` with
//! each `f_i` monic of degree `k_i` and `f_i(0, Y) = (Y - c_i)^(k_i)`. Each
//! factor is split off by shifting its root to zero, preparing, and shifting
//! back.

use crate::error::{Error, Result};
use crate::poly::Degree;
use crate::roots::rational_roots;
use crate::scalar::{Rational, Scalar};
use crate::series::PowerSeries;

use super::Upops;

#[derive(Clone, Debug)]
pub struct HenselFactor<C: Scalar> {
    /// Monic of degree `multiplicity`.
    pub factor: Upops<C>,
    pub root: C,
    pub multiplicity: u32,
}

/// `f = leading_unit * prod factors`.
#[derive(Clone, Debug)]
pub struct FactorizationResult<C: Scalar> {
    pub leading_unit: PowerSeries<C>,
    pub factors: Vec<HenselFactor<C>>,
}

impl<C: Scalar> Upops<C> {
    fn unit_leading(&self) -> Result<PowerSeries<C>> {
        let lead = self.leading_coefficient().ok_or(Error::LeadingCoefficientNotUnit)?;
        if lead.homogeneous_part(0)?.constant_term().is_zero() {
            return Err(Error::LeadingCoefficientNotUnit);
        }
        Ok(lead.clone())
    }

    /// `f` divided by its leading coefficient.
    fn monic_part(&self, lead: &PowerSeries<C>) -> Result<Self> {
        let mut coeffs = self.scale_by_series(&lead.inverse()?)?.coeffs;
        // the exact leading coefficient is one
        *coeffs.last_mut().expect("nonzero polynomial") = PowerSeries::one(&self.vars);
        Ok(self.with_coeffs(coeffs))
    }

    /// Hensel factorization with the roots of `f/a_k` at the origin given by
    /// the caller, as `(root, multiplicity)` pairs. The factors follow the
    /// order of `roots`.
    ///
    /// Multiplicities are checked as each factor is split off.
    pub fn hensel_factorize_with_roots(&self, roots: &[(C, u32)]) -> Result<FactorizationResult<C>> {
        let lead = self.unit_leading()?;
        let k = self.coeffs.len() - 1;
        let total: u32 = roots.iter().map(|r| r.1).sum();
        if total as usize != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: total as usize,
            });
        }
        let mut rest = self.monic_part(&lead)?;
        let mut factors = Vec::with_capacity(roots.len());
        for (c, mult) in roots {
            let g = rest.taylor_shift(c)?;
            let w = g.weierstrass_preparation()?;
            if w.d != *mult as usize {
                return Err(Error::MultiplicityMismatch {
                    root: c.to_string(),
                    expected: *mult,
                    found: w.d as u32,
                });
            }
            let neg = -c.clone();
            factors.push(HenselFactor {
                factor: w.p.taylor_shift(&neg)?,
                root: c.clone(),
                multiplicity: *mult,
            });
            rest = w.alpha.taylor_shift(&neg)?;
        }
        debug_assert!(matches!(rest.degree(), Degree::Finite(0)));
        for f in &factors {
            f.factor.update_precision(0)?;
        }
        Ok(FactorizationResult {
            leading_unit: lead,
            factors,
        })
    }
}

impl Upops<Rational> {
    /// Hensel factorization over the rational roots of `f/a_k` at the
    /// origin, taken in ascending order.
    pub fn hensel_factorize(&self) -> Result<FactorizationResult<Rational>> {
        let lead = self.unit_leading()?;
        let fbar = self.monic_part(&lead)?.evaluate_at_origin()?;
        let found = rational_roots(&fbar);
        if !found.splits() {
            return Err(Error::RootsNotRational {
                residual: found.residual.to_string(),
            });
        }
        self.hensel_factorize_with_roots(&found.roots)
    }
}

#[cfg(test)]
mod tests {
    use crate::parser::parse_poly;
    use crate::poly::{Degree, VarSet};
    use crate::scalar::{rat, Rational};
    use crate::series::PowerSeries;
    use crate::upops::Upops;
    use crate::Error;

    fn up(text: &str) -> Upops<Rational> {
        let p = parse_poly(text, &VarSet::new(["X1", "X2"]).unwrap()).unwrap();
        Upops::from_polynomial(&p, "X2").unwrap()
    }

    /// Terms of total degree at most `r` in the coefficient variable.
    fn low(p: &crate::MultiPoly, r: u32) -> crate::MultiPoly {
        crate::MultiPoly::from_terms(
            p.vars(),
            p.terms()
                .filter(|(m, _)| m.exponents()[0] <= r)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    #[test]
    fn cubic_family() {
        let f = up("(X2-1)*(X2-2)*(X2-3) + X1*(X2^2 + X2)");
        let res = f.hensel_factorize().unwrap();
        assert_eq!(res.factors.len(), 3);
        let mut prod = Upops::from_coefficients("X2", f.vars(), vec![res.leading_unit.clone()]).unwrap();
        for (i, h) in res.factors.iter().enumerate() {
            assert_eq!(h.root, rat(i as i64 + 1));
            assert_eq!(h.multiplicity, 1);
            assert_eq!(h.factor.precision(), 0);
            assert_eq!(h.factor.evaluate_at_origin().unwrap().to_string(), format!("X2 - {}", i + 1));
            prod = prod.mul(&h.factor).unwrap();
        }
        for r in [0, 5, 9] {
            assert_eq!(low(&prod.truncate(r).unwrap(), r), low(&f.truncate(r).unwrap(), r));
        }
    }

    #[test]
    fn single_repeated_root() {
        let f = up("X2^2 - X1");
        let res = f.hensel_factorize().unwrap();
        assert_eq!(res.factors.len(), 1);
        let h = &res.factors[0];
        assert_eq!((h.root.clone(), h.multiplicity), (rat(0), 2));
        assert_eq!(h.factor.degree(), Degree::Finite(2));
        assert_eq!(h.factor.truncate(10).unwrap(), f.truncate(10).unwrap());
    }

    #[test]
    fn non_unit_leading_coefficient() {
        let f = up("X1*X2^2 + X2 + 1");
        assert_eq!(f.hensel_factorize().unwrap_err(), Error::LeadingCoefficientNotUnit);
    }

    #[test]
    fn irrational_roots() {
        let v = VarSet::empty();
        let f = Upops::from_polynomial(&parse_poly("X2^2 + 1", &VarSet::new(["X2"]).unwrap()).unwrap(), "X2")
            .unwrap();
        assert_eq!(f.vars(), &v);
        assert_eq!(
            f.hensel_factorize().unwrap_err(),
            Error::RootsNotRational {
                residual: "X2^2 + 1".into()
            }
        );
    }

    #[test]
    fn non_monic_unit_leading_coefficient() {
        let v = VarSet::new(["X1"]).unwrap();
        let lead = PowerSeries::from_polynomial(parse_poly("2 + X1", &v).unwrap());
        let monic = up("(X2 - 1)*(X2 + 1) + X1");
        let f = monic.scale_by_series(&lead).unwrap();
        let res = f.hensel_factorize().unwrap();
        let roots: Vec<_> = res.factors.iter().map(|h| h.root.clone()).collect();
        assert_eq!(roots, [rat(-1), rat(1)]);
        let prod = res.factors[0].factor.mul(&res.factors[1].factor).unwrap();
        assert_eq!(low(&prod.truncate(8).unwrap(), 8), low(&monic.truncate(8).unwrap(), 8));
    }

    #[test]
    fn wrong_user_roots() {
        let f = up("(X2-1)*(X2-2) + X1");
        assert!(matches!(
            f.hensel_factorize_with_roots(&[(rat(1), 2)]),
            Err(Error::MultiplicityMismatch { .. })
        ));
        assert!(matches!(
            f.hensel_factorize_with_roots(&[(rat(1), 1)]),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
