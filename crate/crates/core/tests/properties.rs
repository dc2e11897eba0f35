use proptest::prelude::*;

use slicereg::theorems::{corpus_function, normalize_leading, BOHR_RADIUS};
use slicereg::{regular_conjugate, star_product, symmetrization, QSeries, Quaternion};

fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-3.0f64..3.0).prop_map(Quaternion::from_array)
}

fn series(max_degree: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(quaternion(), 1..=max_degree + 1).prop_map(QSeries::new)
}

fn ball_point() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_map(|q| q * (0.99 / (1.0 + q.modulus())))
}

proptest! {
    #[test]
    fn modulus_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert!(((p * q).modulus() - p.modulus() * q.modulus()).abs() < 1e-12);
    }

    #[test]
    fn conjugate_reverses_products(p in quaternion(), q in quaternion()) {
        prop_assert!((p * q).conj().max_abs_diff(q.conj() * p.conj()) < 1e-12);
    }

    #[test]
    fn modulus_bounded_by_majorant(f in series(8), q in ball_point()) {
        prop_assert!(f.evaluate(q).modulus() <= f.majorant_sum(q.modulus()) * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn star_conjugate_is_antimultiplicative(f in series(5), g in series(5)) {
        let lhs = regular_conjugate(&star_product(&f, &g));
        let rhs = star_product(&regular_conjugate(&g), &regular_conjugate(&f));
        prop_assert!(lhs.max_coeff_diff(&rhs) < 1e-10);
    }

    #[test]
    fn symmetrization_is_real(f in series(8)) {
        prop_assert!(symmetrization(&f).is_real(1e-11));
    }

    #[test]
    fn star_with_real_series_is_pointwise(c in prop::collection::vec(-2.0f64..2.0, 1..6), g in series(5), q in ball_point()) {
        let r = QSeries::from_real(&c);
        let lhs = star_product(&r, &g).evaluate(q);
        let rhs = r.evaluate(q) * g.evaluate(q);
        prop_assert!(lhs.max_abs_diff(rhs) < 1e-10);
    }

    #[test]
    fn normalization_keeps_majorant(f in series(8), r in 0.0f64..1.0) {
        let g = normalize_leading(&f);
        prop_assert!((g.majorant_sum(r) - f.majorant_sum(r)).abs() < 1e-12 * (1.0 + f.majorant_sum(r)));
    }

    #[test]
    fn corpus_majorant_below_one_at_bohr_radius(seed in any::<u64>(), index in 0u64..1000) {
        let f = corpus_function(seed, index, None);
        prop_assert!(f.certified_sup < 1.0);
        prop_assert!(f.majorant_with_tail(BOHR_RADIUS) < 1.0);
    }
}
