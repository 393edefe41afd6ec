use dirpoly::{h_map, BigUint, DirPoly, LabelledBundle, RectValue};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = DirPoly> {
    prop::collection::vec((0u64..=8, 0u64..=8), 0..4).prop_map(DirPoly::from_small_terms)
}

fn rect() -> impl Strategy<Value = RectValue> {
    (0u64..=12, 0u64..=40).prop_map(|(a, p)| RectValue::new(a, p))
}

proptest! {
    #[test]
    fn dir_is_a_commutative_rig(d in small_poly(), e in small_poly(), f in small_poly()) {
        prop_assert_eq!(&(&d + &e) + &f, &d + &(&e + &f));
        prop_assert_eq!(&(&d * &e) * &f, &d * &(&e * &f));
        prop_assert_eq!(&d + &e, &e + &d);
        prop_assert_eq!(&d * &e, &e * &d);
        prop_assert_eq!(&d + &DirPoly::zero(), d.clone());
        prop_assert_eq!(&d * &DirPoly::one(), d.clone());
        prop_assert_eq!(&d * &DirPoly::zero(), DirPoly::zero());
        prop_assert_eq!(&d * &(&e + &f), &(&d * &e) + &(&d * &f));
    }

    #[test]
    fn multiplying_by_zero_exponential(d in small_poly()) {
        let expected = DirPoly::term(d.eval(0), 0u32);
        prop_assert_eq!(&d * &DirPoly::exponential(0u32), expected);
    }

    #[test]
    fn eval_is_a_rig_map(d in small_poly(), e in small_poly(), n in 0u64..=5) {
        prop_assert_eq!((&d + &e).eval(n), d.eval(n) + e.eval(n));
        prop_assert_eq!((&d * &e).eval(n), d.eval(n) * e.eval(n));
        let (outcomes, draws) = d.cardinalities();
        prop_assert_eq!(outcomes, d.eval(0));
        prop_assert_eq!(draws, d.eval(1));
    }

    #[test]
    fn bundle_round_trip(d in small_poly()) {
        let b = d.to_bundle().unwrap();
        prop_assert_eq!(b.to_poly(), d.clone());
        prop_assert_eq!(BigUint::from(b.num_outcomes()), d.num_outcomes());
        prop_assert_eq!(b.num_draws(), d.num_draws());
    }

    #[test]
    fn bundle_order_is_irrelevant(mut sizes in prop::collection::vec(0u64..=6, 0..8)) {
        let d = LabelledBundle::from_sizes(sizes.clone()).to_poly();
        sizes.reverse();
        prop_assert_eq!(LabelledBundle::from_sizes(sizes).to_poly(), d);
    }

    #[test]
    fn rect_is_a_commutative_rig(r in rect(), s in rect(), t in rect()) {
        prop_assert_eq!(&(&r + &s) + &t, &r + &(&s + &t));
        prop_assert_eq!(&(&r * &s) * &t, &r * &(&s * &t));
        prop_assert_eq!(&r + &s, &s + &r);
        prop_assert_eq!(&r * &s, &s * &r);
        prop_assert_eq!(&r + &RectValue::zero(), r.clone());
        prop_assert_eq!(&r * &RectValue::one(), r.clone());
        prop_assert_eq!(&r * &RectValue::zero(), RectValue::zero());
        prop_assert_eq!(&r * &(&s + &t), &(&r * &s) + &(&r * &t));
    }

    #[test]
    fn h_is_a_rig_homomorphism(d in small_poly(), e in small_poly()) {
        prop_assert_eq!(h_map(&(&d + &e)), &h_map(&d) + &h_map(&e));
        prop_assert_eq!(h_map(&(&d * &e)), &h_map(&d) * &h_map(&e));
        prop_assert_eq!(h_map(&DirPoly::one()), RectValue::one());
        prop_assert_eq!(h_map(&DirPoly::zero()), RectValue::zero());
        prop_assert_eq!(h_map(&d).area().clone(), d.eval(1));
    }

    #[test]
    fn h_scalar_laws(d in small_poly(), a in 0u64..=6) {
        let a = BigUint::from(a);
        let scaled = h_map(&d.scale(&a));
        let base = h_map(&d);
        prop_assert_eq!(scaled.area(), &(base.area() * &a));
        if *base.area() > BigUint::ZERO && a > BigUint::ZERO {
            prop_assert_eq!(scaled.power_product(), &base.power_product().pow((&a).try_into().unwrap()));
            let (w1, w2) = (scaled.width().unwrap().value, base.width().unwrap().value);
            prop_assert!((w1 - w2).abs() <= 1e-12 * w2);
        }
        prop_assert_eq!(h_map(&DirPoly::constant(a.clone())), RectValue::new(a, 1u32));
    }

    #[test]
    fn power_product_is_fibre_product(sizes in prop::collection::vec(0u32..=9, 0..6)) {
        let b = LabelledBundle::from_sizes(sizes.clone());
        let expected: BigUint = sizes.iter().map(|&s| BigUint::from(s).pow(s)).product();
        prop_assert_eq!(h_map(&b.to_poly()).power_product().clone(), expected);
    }
}

/// The rectangle rig on `(A, W)` pairs exactly as defined, in floating point.
#[derive(Debug, Clone, Copy)]
struct FloatRect {
    area: f64,
    width: f64,
}

impl FloatRect {
    fn add(self, other: FloatRect) -> FloatRect {
        let area = self.area + other.area;
        let width = if area == 0.0 {
            // (W1^0 W2^0)^(1/0) is undefined; any value is in the same class
            0.0
        } else {
            (self.width.powf(self.area) * other.width.powf(other.area)).powf(1.0 / area)
        };
        FloatRect { area, width }
    }

    fn mul(self, other: FloatRect) -> FloatRect {
        FloatRect {
            area: self.area * other.area,
            width: self.width * other.width,
        }
    }
}

fn float_rect() -> impl Strategy<Value = FloatRect> {
    prop_oneof![
        (1u32..=6, 1u32..=5).prop_map(|(a, w)| FloatRect {
            area: a as f64,
            width: w as f64
        }),
        (0u32..=5).prop_map(|w| FloatRect {
            area: 0.0,
            width: w as f64
        }),
    ]
}

fn quotient(r: FloatRect) -> RectValue {
    let a = r.area as u32;
    RectValue::new(a, BigUint::from(r.width as u32).pow(a))
}

fn agrees(exact: &RectValue, float: FloatRect) -> bool {
    let a = float.area;
    if exact.area() != &BigUint::from(a as u64) {
        return false;
    }
    if a == 0.0 {
        return exact.power_product() == &BigUint::from(1u32);
    }
    let w = exact.width().unwrap().value;
    (w - float.width).abs() <= 1e-9 * float.width.max(1.0)
}

proptest! {
    // Identifying all zero-area elements is compatible with the operations:
    // the exact (A, P) arithmetic tracks the defining (A, W) arithmetic even
    // when zero-area operands carry arbitrary widths.
    #[test]
    fn zero_area_quotient_is_sound(r in float_rect(), s in float_rect(), t in float_rect()) {
        let lhs = r.mul(s.add(t));
        let exact = &quotient(r) * &(&quotient(s) + &quotient(t));
        prop_assert!(agrees(&exact, lhs), "{exact:?} vs {lhs:?}");
        let sum = r.add(s).add(t);
        let exact = &(&quotient(r) + &quotient(s)) + &quotient(t);
        prop_assert!(agrees(&exact, sum), "{exact:?} vs {sum:?}");
    }
}
