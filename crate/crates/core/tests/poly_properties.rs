use mps::parser::{parse, parse_poly};
use mps::{Error, Monomial, MultiPoly, Rational, VarSet};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn xyz() -> VarSet {
    VarSet::new(["x", "y", "z"]).unwrap()
}

prop_compose! {
    fn term()(e in prop::collection::vec(0u32..4, 3), n in -9i64..=9, d in 1i64..5) -> (Monomial, Rational) {
        (Monomial::new(e), Rational::new(BigInt::from(n), BigInt::from(d)))
    }
}

prop_compose! {
    fn poly()(terms in prop::collection::vec(term(), 0..6)) -> MultiPoly {
        MultiPoly::from_terms(&xyz(), terms)
    }
}

fn audit(p: &MultiPoly) {
    for (_, c) in p.terms() {
        assert!(c.denom().is_positive());
        assert!(num_integer::Integer::gcd(c.numer(), c.denom()).is_one());
        assert!(!num_traits::Zero::is_zero(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        audit(&(&(&a * &b) - &c));
    }

    #[test]
    fn components_reconstruct(p in poly()) {
        let mut sum = MultiPoly::zero(&xyz());
        for h in p.homogeneous_components() {
            prop_assert!(h.is_homogeneous_of(h.degree()));
            sum = &sum + h.as_poly();
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn power_is_iterated_product(p in poly(), n in 0u32..=8) {
        let mut acc = MultiPoly::one(&xyz());
        for _ in 0..n {
            acc = &acc * &p;
        }
        prop_assert_eq!(p.pow(n), acc);
    }

    #[test]
    fn render_round_trip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, &xyz()).unwrap(), p);
    }

    #[test]
    fn parse_is_total(s in "[-+*/^() 0-9xyz_a]{0,40}") {
        match parse(&s) {
            Ok(_) => {}
            Err(Error::Syntax { offset, .. }) => prop_assert!(offset <= s.len()),
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }

    #[test]
    fn parse_is_total_on_arbitrary_text(s in "\\PC{0,30}") {
        match parse(&s) {
            Ok(_) | Err(Error::Syntax { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }
}

#[test]
fn scale_and_divide() {
    let v = xyz();
    let p = parse_poly("2*x + 4", &v).unwrap();
    assert_eq!(p.scale(&Rational::new(1.into(), 2.into())).to_string(), "x + 2");
    assert_eq!(
        parse_poly("x + y", &v).unwrap().div_scalar(&Rational::from_integer(3.into())).unwrap().to_string(),
        "1/3*x + 1/3*y"
    );
    assert_eq!(p.div_scalar(&Rational::from_integer(0.into())), Err(Error::DivisionByZero));
}
