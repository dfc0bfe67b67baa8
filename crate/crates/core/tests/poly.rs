mod common;

use std::cmp::Ordering;

use bigraded_lc::field::{Field, PrimeField, Rationals};
use bigraded_lc::poly::{Bidegree, IdealFile, Monomial, PolyError, RingSpec, P};
use common::exps_of_degree;
use proptest::prelude::*;

fn spec() -> RingSpec<PrimeField> {
    RingSpec::new(2, 2, PrimeField::default())
}

/// A bihomogeneous form of the given bidegree in `S = K[x1, x2, y1, y2]`.
fn form(a: i64, b: i64) -> impl Strategy<Value = P<PrimeField>> {
    let monos: Vec<Monomial> = exps_of_degree(2, a)
        .into_iter()
        .flat_map(|x| exps_of_degree(2, b).into_iter().map(move |y| Monomial::from_exponents(&[x.clone(), y].concat())))
        .collect();
    let n = monos.len();
    prop::collection::vec((0..n, 1u32..32003), 1..4)
        .prop_map(move |picks| spec().s().from_terms(picks.into_iter().map(|(k, c)| (monos[k].clone(), c)).collect()))
}

fn any_form() -> impl Strategy<Value = P<PrimeField>> {
    (0i64..3, 0i64..3).prop_flat_map(|(a, b)| form(a, b)).prop_filter("nonzero", |f| !f.is_zero())
}

#[test]
fn parsing_examples() {
    let s = spec();
    let f = s.parse("x1*y1 + x2*y2").unwrap();
    assert_eq!(f.len(), 2);
    assert_eq!(s.bidegree_of(&f).unwrap(), Bidegree::new(1, 1));

    let g = s.parse("x1^2*y1*y2 - 3*x2^3*y1^2").unwrap();
    assert_eq!(g.len(), 2);
    assert!(g.terms().iter().any(|(_, c)| *c == 32000));

    let h = s.parse("x1*(y1+y2)").unwrap();
    assert_eq!(h, s.parse("x1*y1 + x1*y2").unwrap());
}

#[test]
fn parse_errors() {
    let s = spec();
    assert!(matches!(s.parse("x1 +"), Err(PolyError::Syntax { .. })));
    assert!(matches!(s.parse("z1"), Err(PolyError::UnknownVariable { .. })));
    assert!(matches!(s.parse("x3"), Err(PolyError::UnknownVariable { .. })));
}

#[test]
fn bidegrees() {
    let s = spec();
    assert_eq!(s.bidegree_of(&s.parse("x1^3").unwrap()).unwrap(), Bidegree::new(3, 0));
    assert_eq!(s.bidegree_of(&s.parse("x1^2*y1 + x2*y2").unwrap()), Err(PolyError::NotBihomogeneous));
    assert_eq!(s.bidegree_of(&s.parse("0").unwrap()), Err(PolyError::ZeroPolynomial));
}

#[test]
fn specialization() {
    let s = spec();
    let r = s.s();
    let zero = s.field().zero();
    let one = s.field().one();
    let show = |f: &P<PrimeField>| r.format(f);
    assert_eq!(show(&r.specialize(&s.parse("x1*y1 + x2*y2").unwrap(), 0, &zero)), "x2*y2");
    assert_eq!(r.specialize(&s.parse("x1^2 + x1*x2").unwrap(), 0, &one), s.parse("1 + x2").unwrap());
    assert_eq!(show(&r.specialize(&s.parse("x2*y2").unwrap(), 0, &zero)), "x2*y2");
}

#[test]
fn content_examples() {
    let s = spec();
    let show = |f: &str| -> Vec<(String, String)> {
        s.content_coefficients(&s.parse(f).unwrap())
            .unwrap()
            .into_iter()
            .map(|(y, c)| (s.s().format_monomial(&s.y_monomial(&y)), s.s0().format(&c)))
            .collect()
    };
    assert_eq!(show("x1*y1 + x2*y2"), [("y1".into(), "x1".into()), ("y2".into(), "x2".into())]);
    assert_eq!(show("x1^2*y1*y2 + x2^2*y1*y2"), [("y1*y2".to_string(), "x1^2 + x2^2".to_string())]);
    assert_eq!(show("x1^2*y1 + x1*x2*y2"), [("y1".into(), "x1^2".into()), ("y2".into(), "x1*x2".into())]);
}

#[test]
fn rational_coefficients() {
    let s = RingSpec::new(1, 1, Rationals);
    let f = s.parse("x1*y1/2 - 3*x1*y1").unwrap();
    assert_eq!(s.s().format(&f), "-5/2*x1*y1");
    assert_eq!(s.parse(&s.s().format(&f)).unwrap(), f);
}

#[test]
fn ideal_file_round_trip() {
    let text = "ring m=2 n=2 p=32003\nx1*y1 + x2*y2\n";
    let file = IdealFile::parse(text).unwrap();
    assert_eq!((file.m, file.n, file.p), (2, 2, 32003));
    assert_eq!(file.render(), text);
    assert!(IdealFile::parse("ring m=0 n=2\n").is_err());
}

proptest! {
    #[test]
    fn bidegree_is_additive(f in any_form(), g in any_form()) {
        let s = spec();
        let fg = s.s().mul(&f, &g);
        prop_assert_eq!(s.bidegree_of(&fg).unwrap(), s.bidegree_of(&f).unwrap() + s.bidegree_of(&g).unwrap());
    }

    #[test]
    fn printing_then_parsing_is_identity(f in any_form(), g in any_form()) {
        let s = spec();
        let h = s.s().add(&f, &g);
        prop_assert_eq!(s.parse(&s.s().format(&h)).unwrap(), h);
    }

    #[test]
    fn content_reassembles(f in any_form()) {
        let s = spec();
        let mut total = s.s().zero();
        for (y, c) in s.content_coefficients(&f).unwrap() {
            let ymono = s.s().monomial(s.y_monomial(&y));
            total = s.s().add(&total, &s.s().mul(&s.lift(&c), &ymono));
        }
        prop_assert_eq!(total, f);
    }

    #[test]
    fn monomial_order_axioms(
        u in prop::collection::vec(0u16..4, 4),
        v in prop::collection::vec(0u16..4, 4),
        w in prop::collection::vec(0u16..4, 4),
    ) {
        let r = spec();
        let r = r.s();
        let (u, v, w) = (Monomial::from_exponents(&u), Monomial::from_exponents(&v), Monomial::from_exponents(&w));
        if r.cmp_monomials(&u, &v) == Ordering::Less {
            prop_assert_eq!(r.cmp_monomials(&u.mul(&w), &v.mul(&w)), Ordering::Less);
        }
        prop_assert_ne!(r.cmp_monomials(&r.one_monomial(), &u), Ordering::Greater);
        if u.degree() < v.degree() {
            prop_assert_eq!(r.cmp_monomials(&u, &v), Ordering::Less);
        }
    }
}
