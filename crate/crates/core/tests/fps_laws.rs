use num_bigint::BigInt;
use proptest::prelude::*;
use rectcap_core::{LaurentPoly, XSeries};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=4, -6i64..=6), 0..5).prop_map(LaurentPoly::from_terms)
}

fn series(order: usize) -> impl Strategy<Value = XSeries> {
    prop::collection::vec(laurent(), order + 1).prop_map(XSeries::from_coeffs)
}

fn triple() -> impl Strategy<Value = (XSeries, XSeries, XSeries)> {
    (0usize..6).prop_flat_map(|n| (series(n), series(n), series(n)))
}

/// A series whose constant term is `±t^e`, so it has an inverse.
fn unit_series() -> impl Strategy<Value = XSeries> {
    (0usize..6, -2i64..=2, any::<bool>()).prop_flat_map(|(n, e, neg)| {
        series(n).prop_map(move |a| {
            let mut coeffs = a.into_coeffs();
            coeffs[0] = LaurentPoly::monomial(if neg { -1 } else { 1 }, e);
            XSeries::from_coeffs(coeffs)
        })
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn series_ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &XSeries::one(a.order()), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn invert_is_two_sided(u in unit_series()) {
        let inv = u.invert().unwrap();
        let one = XSeries::one(u.order());
        prop_assert_eq!(&u * &inv, one.clone());
        prop_assert_eq!(&inv * &u, one);
        prop_assert_eq!(inv.invert().unwrap(), u);
    }

    #[test]
    fn scale_x_is_a_ring_map((a, b, _) in triple(), m in -2i64..=3) {
        prop_assert_eq!((&a * &b).scale_x(m), a.scale_x(m) * b.scale_x(m));
        prop_assert_eq!((&a + &b).scale_x(m), a.scale_x(m) + b.scale_x(m));
        prop_assert_eq!(a.scale_x(m).scale_x(-m), a);
    }

    #[test]
    fn derivative_at_one_obeys_product_rule((a, b, _) in triple()) {
        let lhs = (&a * &b).dt_at_1();
        let rhs = a.dt_at_1() * b.eval_t1() + a.eval_t1() * b.dt_at_1();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!((&a * &b).eval_t1(), a.eval_t1() * b.eval_t1());
    }

    #[test]
    fn json_round_trip(a in series(4)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: XSeries = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn non_units_are_rejected() {
    let a = XSeries::from_coeffs(vec![LaurentPoly::from_terms([(0, 1), (1, 1)]), LaurentPoly::one()]);
    assert!(a.invert().is_err());
    assert!(XSeries::zero(3).invert().is_err());
    assert!(XSeries::from_integers(2, [BigInt::from(2), BigInt::from(1), BigInt::from(0)]).invert().is_err());
}
