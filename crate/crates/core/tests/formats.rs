//! Text-format round trips (print then parse is the identity) and
//! shareability of the core types.

use proptest::prelude::*;

use carlitz_core::bivar::BivarPoly;
use carlitz_core::gf::{field_of_order, Field, FieldElement, FieldExt};
use carlitz_core::poly::Poly;
use carlitz_core::ratfunc::RatFunc;

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(field_of_order(2).unwrap()),
        Just(field_of_order(3).unwrap()),
        Just(field_of_order(4).unwrap()),
        Just(field_of_order(5).unwrap()),
        Just(field_of_order(9).unwrap()),
    ]
}

proptest! {
    #[test]
    fn element_roundtrip(field in small_field(), v in 0u128..64) {
        let q = field.order();
        let e = field.elt_from_value(v % q).unwrap();
        let text = e.to_string();
        let back = FieldElement::parse(&field, &text).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn poly_roundtrip(field in small_field(), vals in proptest::collection::vec(0u64..9, 0..8)) {
        let p = Poly::from_values(&field, &vals);
        let text = p.to_string();
        let back = Poly::parse(&field, &text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn bivar_roundtrip(
        field in small_field(),
        rows in proptest::collection::vec(proptest::collection::vec(0u64..9, 0..4), 0..5),
    ) {
        let coeffs: Vec<Poly> = rows.iter().map(|r| Poly::from_values(&field, r)).collect();
        let p = BivarPoly::from_coeffs(&field, coeffs).unwrap();
        let text = p.to_string();
        let back = BivarPoly::parse(&field, &text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ratfunc_roundtrip(
        field in small_field(),
        num in proptest::collection::vec(0u64..9, 0..5),
        den in proptest::collection::vec(0u64..9, 1..5),
    ) {
        let n = Poly::from_values(&field, &num);
        let mut d = Poly::from_values(&field, &den);
        if d.is_zero() {
            d = Poly::one(&field);
        }
        let r = RatFunc::from_parts(&n, &d).unwrap();
        let text = r.to_string();
        let back = RatFunc::parse(&field, &text).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn ambiguous_input_is_rejected() {
    let f3 = field_of_order(3).unwrap();
    for bad in ["t^", "t +* 1", "(t", "t^2 t", "y+1", "2**t", ""] {
        assert!(Poly::parse(&f3, bad).is_err(), "accepted {bad:?}");
    }
    // The generator z only exists in extension fields.
    assert!(Poly::parse(&f3, "z*t").is_err());
    assert!(Poly::parse(&field_of_order(9).unwrap(), "z*t").is_ok());
}

#[test]
fn shared_types_are_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<Field>();
    check::<FieldElement>();
    check::<Poly>();
    check::<BivarPoly>();
    check::<RatFunc>();
    check::<carlitz_core::carlitz::CyclotomicField>();
    check::<carlitz_core::splitting::SplittingData>();
    check::<carlitz_core::ultra::UltraFieldFamily>();
}
