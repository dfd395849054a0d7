use ellsurf_core::{rat, FieldElem};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..=30, 1i64..=12)
}

fn elem() -> impl Strategy<Value = FieldElem> {
    (small(), small(), small(), small()).prop_map(|(a, b, c, d)| {
        FieldElem::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, FieldElem::zero());
    }

    #[test]
    fn inverse(a in elem()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), FieldElem::one());
    }

    #[test]
    fn norm_multiplicative(a in elem(), b in elem()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn conjugations_are_automorphisms(a in elem(), b in elem()) {
        prop_assert_eq!((&a * &b).conj_i(), &a.conj_i() * &b.conj_i());
        prop_assert_eq!((&a * &b).conj_sqrt2(), &a.conj_sqrt2() * &b.conj_sqrt2());
        prop_assert_eq!((&a + &b).conj_i(), &a.conj_i() + &b.conj_i());
    }

    #[test]
    fn square_roots(a in elem()) {
        let r = a.pow(2).sqrt().expect("a square has a root");
        prop_assert_eq!(r.pow(2), a.pow(2));
    }

    #[test]
    fn text_round_trip(a in elem()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<FieldElem>().unwrap(), a);
    }
}

#[test]
fn generators() {
    let i = FieldElem::i();
    let r2 = FieldElem::sqrt2();
    assert_eq!(i.pow(2), FieldElem::int(-1));
    assert_eq!(r2.pow(2), FieldElem::int(2));
    assert_eq!(&i * &r2, FieldElem::i_sqrt2());
    assert_eq!(FieldElem::zero().inv().is_err(), true);
    assert!(FieldElem::int(3).sqrt().is_none());
    assert_eq!(FieldElem::int(-2).sqrt().map(|r| r.pow(2)), Some(FieldElem::int(-2)));
}
