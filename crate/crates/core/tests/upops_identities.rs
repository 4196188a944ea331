use mps::{rat, Degree, Monomial, MultiPoly, QUpops, Rational, Series, SeriesF64, MultiPolyF64, VarSet};
use mps_oracle::random_poly;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coeff_vars() -> VarSet {
    VarSet::new(["X1", "X2"]).unwrap()
}

/// Random `Y`-polynomial of degree `k` with polynomial coefficients; the
/// constant terms of `a_0..a_{d-1}` are cleared so that `a_d` is the first
/// unit.
fn random_prepared(rng: &mut ChaCha8Rng, k: usize, d: usize) -> QUpops {
    let v = coeff_vars();
    let mut coeffs = Vec::new();
    for i in 0..=k {
        let mut p = random_poly(rng, &v, 3, 3, 5, 2);
        let c0 = MultiPoly::constant(&v, p.constant_term());
        p = &p - &c0;
        if i == d || i == k {
            p = &p + &MultiPoly::constant(&v, rat(rng.gen_range(1..=4)));
        } else if i > d && rng.gen_bool(0.5) {
            p = &p + &MultiPoly::constant(&v, rat(rng.gen_range(-3..=3)));
        }
        coeffs.push(p);
    }
    QUpops::from_polys("Y", &v, coeffs).unwrap()
}

#[test]
fn weierstrass_defining_properties() {
    for seed in 0..24 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=5);
        let d = rng.gen_range(0..=k);
        let f = random_prepared(&mut rng, k, d);
        let w = f.weierstrass_preparation().unwrap();
        assert_eq!((w.d, w.d + w.m), (d, k));
        assert_eq!(w.p.degree(), Degree::Finite(d as u32));
        let p_coeffs = w.p.coefficients();
        assert_eq!(p_coeffs[d].truncate(6).unwrap(), MultiPoly::one(f.vars()));
        for b in &p_coeffs[..d] {
            assert!(b.homogeneous_part(0).unwrap().is_zero());
        }
        assert!(!w.alpha.coefficients()[0].homogeneous_part(0).unwrap().constant_term().is_zero());
        let prod = w.p.mul(&w.alpha).unwrap();
        for r in [0, 4, 9] {
            assert_eq!(prod.truncate(r).unwrap(), f.truncate(r).unwrap(), "seed {seed} r {r}");
        }
    }
}

#[test]
fn weierstrass_simultaneity() {
    for seed in 50..60 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(2..=5);
        let d = rng.gen_range(1..k);
        let f = random_prepared(&mut rng, k, d);
        let w = f.weierstrass_preparation().unwrap();
        let all: Vec<_> = w.p.coefficients()[..d].iter().chain(w.alpha.coefficients()).cloned().collect();
        let r = rng.gen_range(1..8);
        let pick = &all[rng.gen_range(0..all.len())];
        pick.homogeneous_part(r).unwrap();
        for s in &all {
            assert!(s.precision() >= r as i64);
        }
    }
}

/// `P(Y + c)` for a polynomial in `vars + [Y]`.
fn substitute(p: &MultiPoly, c: &Rational) -> MultiPoly {
    let vars = p.vars();
    let y = vars.len() - 1;
    let lin = &MultiPoly::variable(vars, &vars.names()[y]).unwrap() + &MultiPoly::constant(vars, c.clone());
    let mut out = MultiPoly::zero(vars);
    for (m, coeff) in p.terms() {
        let mut e = m.exponents().to_vec();
        let k = std::mem::replace(&mut e[y], 0);
        let rest = MultiPoly::from_terms(vars, [(Monomial::new(e), coeff.clone())]);
        out = &out + &(&rest * &lin.pow(k));
    }
    out
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-5..=5)), BigInt::from(rng.gen_range(1..=3)))
}

#[test]
fn taylor_shift_group_law_and_substitution() {
    for seed in 0..60 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let v = coeff_vars();
        let k = rng.gen_range(0..=4);
        let coeffs = (0..=k).map(|_| random_poly(&mut rng, &v, 3, 3, 5, 2)).collect();
        let f = QUpops::from_polys("Y", &v, coeffs).unwrap();
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let fa = f.taylor_shift(&a).unwrap();
        let lhs = fa.taylor_shift(&b).unwrap();
        let rhs = f.taylor_shift(&(a.clone() + &b)).unwrap();
        let back = fa.taylor_shift(&-a.clone()).unwrap();
        for d in [0, 3, 10] {
            assert_eq!(lhs.truncate(d).unwrap(), rhs.truncate(d).unwrap());
            assert_eq!(back.truncate(d).unwrap(), f.truncate(d).unwrap());
            assert_eq!(fa.truncate(d).unwrap(), substitute(&f.truncate(d).unwrap(), &a));
        }
        let same = f.taylor_shift(&rat(0)).unwrap();
        assert_eq!(same.truncate(10).unwrap(), f.truncate(10).unwrap());
    }
}

#[test]
fn hensel_on_random_split_inputs() {
    for seed in 0..8 {
        let mut rng = ChaCha8Rng::seed_from_u64(77 + seed);
        let v = VarSet::new(["X1"]).unwrap();
        let full = VarSet::new(["X1", "Y"]).unwrap();
        let y = MultiPoly::variable(&full, "Y").unwrap();
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < 3 {
            let r = rng.gen_range(-4..=4);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let mults: Vec<u32> = roots.iter().map(|_| rng.gen_range(1..=2)).collect();
        let mut p = MultiPoly::one(&full);
        for (r, m) in roots.iter().zip(&mults) {
            p = &p * &(&y - &MultiPoly::constant(&full, rat(*r))).pow(*m);
        }
        let deg: u32 = mults.iter().sum();
        let x = MultiPoly::variable(&full, "X1").unwrap();
        let noise = random_poly(&mut rng, &full, deg - 1, 4, 4, 1);
        let noise = MultiPoly::from_terms(&full, noise.terms().filter(|(m, _)| m.exponents()[1] < deg).map(|(m, c)| (m.clone(), c.clone())));
        let f = QUpops::from_polynomial(&(&p + &(&x * &noise)), "Y").unwrap();
        assert_eq!(f.vars(), &v);

        let res = f.hensel_factorize().unwrap();
        let mut sorted: Vec<_> = roots.iter().zip(&mults).map(|(r, m)| (rat(*r), *m)).collect();
        sorted.sort();
        let got: Vec<_> = res.factors.iter().map(|h| (h.root.clone(), h.multiplicity)).collect();
        assert_eq!(got, sorted);
        let mut prod = QUpops::from_coefficients("Y", &v, vec![res.leading_unit.clone()]).unwrap();
        for h in &res.factors {
            assert_eq!(h.factor.precision(), 0);
            let lin = QUpops::from_polys("Y", &v, vec![MultiPoly::constant(&v, -h.root.clone()), MultiPoly::one(&v)])
                .unwrap()
                .evaluate_at_origin()
                .unwrap();
            assert_eq!(h.factor.evaluate_at_origin().unwrap(), lin.pow(h.multiplicity));
            prod = prod.mul(&h.factor).unwrap();
        }
        for r in [0, 4, 8] {
            assert_eq!(prod.truncate(r).unwrap(), f.truncate(r).unwrap());
        }
    }
}

#[test]
fn float_coefficients() {
    let v = VarSet::new(["x", "y"]).unwrap();
    let g = MultiPolyF64::from_terms(
        &v,
        [
            (Monomial::one(2), 1.0),
            (Monomial::var(2, 0), -0.5),
            (Monomial::var(2, 1), -0.25),
        ],
    );
    let inv = SeriesF64::from_polynomial(g.clone()).inverse().unwrap();
    let x3 = inv.get_coefficient(&Monomial::new(vec![3, 0])).unwrap();
    assert!((x3 - 0.125).abs() < 1e-12);
    let one = SeriesF64::mul_many(&[inv, SeriesF64::from_polynomial(g)]).unwrap();
    let t = one.truncate(12).unwrap();
    assert_eq!(t.num_terms(), 1);
    assert!((t.constant_term() - 1.0).abs() < 1e-12);

    let exact = Series::from_polynomial(mps::parser::parse_poly("1 - 1/2*x - 1/4*y", &v).unwrap());
    assert_eq!(exact.inverse().unwrap().get_coefficient(&Monomial::new(vec![3, 0])).unwrap(), Rational::new(1.into(), 8.into()));
}
