use dirpoly::{
    check_cross_rectangle_area, check_rectangle_area, cross_measures, entropy, measures,
    poly_entropy, CheckStatus, DirPoly, LabelledBundle, DEFAULT_TOLERANCE,
};
use proptest::prelude::*;

fn poly_with_draws() -> impl Strategy<Value = DirPoly> {
    prop::collection::vec((0u64..=8, 0u64..=8), 1..5)
        .prop_map(DirPoly::from_small_terms)
        .prop_filter("needs a draw", |d| d.num_draws() > 0u32.into())
}

fn aligned_pair(min: u32) -> impl Strategy<Value = (LabelledBundle, LabelledBundle)> {
    prop::collection::vec((min..=9, min..=9), 1..7)
        .prop_map(|pairs| {
            (
                LabelledBundle::from_sizes(pairs.iter().map(|p| p.0)),
                LabelledBundle::from_sizes(pairs.iter().map(|p| p.1)),
            )
        })
        .prop_filter("needs draws on both sides", |(d, e)| {
            d.has_draws() && e.has_draws()
        })
}

proptest! {
    #[test]
    fn rectangle_area_formula(d in poly_with_draws()) {
        let report = check_rectangle_area(&d, DEFAULT_TOLERANCE).unwrap();
        prop_assert!(report.passed(), "{report:?}");
        prop_assert!(report.measures.entropy >= 0.0);
        prop_assert_eq!(report.measures.length, report.measures.entropy.exp2());
    }

    #[test]
    fn entropy_is_additive_on_products(d in poly_with_draws(), e in poly_with_draws()) {
        let (hd, he) = (poly_entropy(&d).unwrap(), poly_entropy(&e).unwrap());
        let hde = poly_entropy(&(&d * &e)).unwrap();
        prop_assert!((hde - hd - he).abs() <= 1e-9);
        let (ld, le) = (measures(&d).unwrap().length, measures(&e).unwrap().length);
        let lde = measures(&(&d * &e)).unwrap().length;
        prop_assert!((lde - ld * le).abs() <= 1e-9 * lde);
    }

    #[test]
    fn multiplying_draws_keeps_entropy(d in poly_with_draws(), m in 1u64..=6) {
        let scaled = &DirPoly::exponential(m) * &d;
        let diff = poly_entropy(&scaled).unwrap() - poly_entropy(&d).unwrap();
        prop_assert!(diff.abs() <= 1e-9);
    }

    #[test]
    fn bundle_and_poly_entropy_agree(d in poly_with_draws()) {
        let b = d.to_bundle().unwrap();
        prop_assert!((entropy(&b).unwrap() - poly_entropy(&d).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn cross_rectangle_area_formula((d, e) in aligned_pair(1)) {
        let report = check_cross_rectangle_area(&d, &e, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(report.status, CheckStatus::Pass, "{:?}", report);
        let m = report.measures;
        prop_assert!(m.kl_divergence >= -1e-9);
        let h = entropy(&d).unwrap();
        prop_assert!((m.kl_divergence - (m.cross_entropy - h)).abs() <= 1e-12);
    }

    #[test]
    fn cross_with_self_is_plain((b, _) in aligned_pair(0)) {
        let m = cross_measures(&b, &b).unwrap();
        let plain = measures(&b.to_poly()).unwrap();
        prop_assert_eq!(&m.cross_area, &plain.area);
        prop_assert_eq!(&m.cross_power_product, &plain.power_product);
        prop_assert!((m.cross_entropy - plain.entropy).abs() <= 1e-12);
        prop_assert!((m.cross_width - plain.width).abs() <= 1e-12 * plain.width);
        prop_assert!((m.cross_length - plain.length).abs() <= 1e-12 * plain.length);
        prop_assert!(m.kl_divergence.abs() <= 1e-12);
    }

    #[test]
    fn degenerate_iff_unsupported_mass((d, e) in aligned_pair(0)) {
        let unsupported = d
            .sizes()
            .zip(e.sizes())
            .any(|(ds, es)| *ds > 0u32.into() && *es == 0u32.into());
        let report = check_cross_rectangle_area(&d, &e, DEFAULT_TOLERANCE).unwrap();
        let m = &report.measures;
        prop_assert_eq!(m.cross_entropy.is_infinite(), unsupported);
        if unsupported {
            prop_assert_eq!(report.status, CheckStatus::Degenerate);
            prop_assert_eq!(m.cross_width, 0.0);
            prop_assert_eq!(m.cross_length, f64::INFINITY);
        } else {
            prop_assert_eq!(report.status, CheckStatus::Pass);
            prop_assert!(m.kl_divergence >= -1e-9);
        }
    }
}
