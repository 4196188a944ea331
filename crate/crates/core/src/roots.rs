//! Rational roots of univariate rational polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, SparsePoly};
use crate::scalar::Rational;

/// `p = leading * prod (x - root)^mult * residual`, with `residual` monic and
/// free of rational roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRoots {
    /// Distinct roots in ascending order with multiplicities.
    pub roots: Vec<(Rational, u32)>,
    pub leading: Rational,
    pub residual: SparsePoly<Rational>,
}

impl RationalRoots {
    pub fn splits(&self) -> bool {
        self.residual.total_degree().finite().unwrap_or(0) == 0
    }
}

/// Positive divisors of `|n|`, `n != 0`, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Divides by `x - r`, which must be a root. Coefficients are ascending.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = coeffs.len() - 1;
    let mut out = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (1..=n).rev() {
        carry = carry * r + &coeffs[i];
        out[i - 1] = carry.clone();
    }
    out
}

/// Rational roots of a univariate polynomial by the rational root test.
///
/// Candidates are `±a/b` with `a | c_low` and `b | c_high` after clearing
/// denominators; divisors are found by trial division, so this is meant for
/// integers of moderate size.
///
/// # Panics
///
/// If `p` has more than one variable.
pub fn rational_roots(p: &SparsePoly<Rational>) -> RationalRoots {
    let vars = p.vars().clone();
    assert!(vars.len() <= 1, "rational_roots needs a univariate polynomial");
    if p.is_zero() {
        return RationalRoots {
            roots: Vec::new(),
            leading: Rational::zero(),
            residual: p.clone(),
        };
    }
    let deg = p.total_degree().finite().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.degree() as usize] = c.clone();
    }
    let leading = coeffs[deg].clone();
    for c in &mut coeffs {
        *c /= &leading;
    }

    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros as u32));
        coeffs.drain(..zeros);
    }

    if coeffs.len() > 1 {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let low = divisors(&ints[0]);
        let high = divisors(ints.last().unwrap());
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &low {
            for b in &high {
                let r = Rational::new(a.clone(), b.clone());
                candidates.push(-r.clone());
                candidates.push(r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mut mult = 0;
            while coeffs.len() > 1 && eval(&coeffs, &r).is_zero() {
                coeffs = deflate(&coeffs, &r);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));

    let residual = SparsePoly::from_terms(
        &vars,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (Monomial::new(vec![i as u32; vars.len()]), c)),
    );
    RationalRoots {
        roots,
        leading,
        residual,
    }
}
