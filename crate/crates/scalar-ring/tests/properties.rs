//! Randomized ring and unit-normalization properties.

use proptest::prelude::*;
use scalar_ring::{cyclotomic_field, CyclotomicField, FieldElement, LaurentScalar};

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-6i64..6, -5i64..5, 1i64..4), 0..5)
        .prop_map(|ts| LaurentScalar::from_terms(ts.into_iter().map(|(k, n, d)| (k, FieldElement::from_frac(n, d)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentScalar> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentScalar>().unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_product(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), Some(a));
    }

    #[test]
    fn unit_equality_is_an_equivalence(
        p in nonzero_laurent(), k1 in -4i64..4, k2 in -4i64..4, s1 in any::<bool>(), s2 in any::<bool>()
    ) {
        let step = 2;
        let unit = |k: i64, neg: bool| {
            let u = LaurentScalar::s_pow(k * step as i64);
            if neg { -u } else { u }
        };
        let q = &unit(k1, s1) * &p;
        let r = &unit(k2, s2) * &q;
        prop_assert!(p.equal_up_to_unit(&p, step).is_some());
        let w = q.equal_up_to_unit(&p, step).unwrap();
        prop_assert_eq!(w.k, k1);
        prop_assert!(p.equal_up_to_unit(&q, step).is_some());
        prop_assert!(r.equal_up_to_unit(&p, step).is_some());
    }

    #[test]
    fn canonical_form_is_unit_invariant(p in nonzero_laurent(), k in -6i64..6, neg in any::<bool>()) {
        let u = if neg { -LaurentScalar::s_pow(k) } else { LaurentScalar::s_pow(k) };
        prop_assert_eq!(p.canonical_unit_form().unwrap(), (&u * &p).canonical_unit_form().unwrap());
    }

    #[test]
    fn cyclotomic_field_axioms(n in 3u32..13, a in prop::collection::vec(-3i64..4, 0..6),
                               b in prop::collection::vec(-3i64..4, 0..6)) {
        let f = cyclotomic_field(n).unwrap();
        let (x, y) = (f.from_coords(&a), f.from_coords(&b));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for n in 1..=12u32 {
        let f = cyclotomic_field(n).unwrap();
        let q = f.q();
        assert!(q.pow(n as i64).unwrap().is_one(), "q^{n} = 1");
        for d in 1..n {
            assert!(!q.pow(d as i64).unwrap().is_one(), "q^{d} != 1 for n = {n}");
        }
    }
}

#[test]
fn spec_field_examples() {
    let q3 = cyclotomic_field(3).unwrap().q();
    assert!(q3.pow(3).unwrap().is_one() && !q3.is_one());
    let q4 = cyclotomic_field(4).unwrap().q();
    assert_eq!(q4.pow(2).unwrap(), FieldElement::from_int(-1));
    assert!(CyclotomicField::new(0).is_err());
}

#[test]
fn mixed_fields_are_rejected() {
    let a = cyclotomic_field(3).unwrap().q();
    let b = cyclotomic_field(5).unwrap().q();
    assert!(a.try_mul(&b).is_err());
    assert!(a.try_add(&FieldElement::from_int(2)).is_ok());
    let (la, lb) = (LaurentScalar::constant(a), LaurentScalar::constant(b));
    assert!(la.try_add(&lb).is_err());
}
