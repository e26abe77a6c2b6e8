use jwdyck::scalar::{qint, qint_b, LaurentPoly};
use jwdyck::Scalar;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i32..=3, -2i32..=2), 0..4).prop_map(LaurentPoly::from_terms)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| Scalar::from_parts(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(&a).unwrap(), &b * &a.inv().unwrap());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in scalar()) {
        let (num, den) = a.canonical();
        let again = Scalar::from_parts(num.clone(), den.clone()).unwrap();
        prop_assert_eq!(again.canonical(), (num, den));
        let json = serde_json::to_string(&a).unwrap();
        let back: Scalar = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}

#[test]
fn type_b_three_term_identity() {
    let two = qint(2).unwrap();
    for n in 2..=32 {
        let lhs = &two * &qint_b(n).unwrap();
        let rhs = &qint_b(n + 1).unwrap() + &qint_b(n - 1).unwrap();
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn quantum_integers_are_bar_invariant() {
    for n in 0..=40 {
        let p = qint(n).unwrap();
        assert_eq!(p.invert_q(), p, "n = {n}");
    }
}

#[test]
fn type_a_three_term_identity() {
    let two = qint(2).unwrap();
    for n in 1..=32 {
        assert_eq!(&two * &qint(n).unwrap(), &qint(n + 1).unwrap() + &qint(n - 1).unwrap());
    }
}

#[test]
fn negative_indices_rejected() {
    assert!(qint(-1).is_err());
    assert!(qint_b(-3).is_err());
}
