//! Bohr-type inequalities: the majorant `sum |q^n a_n|` of a function
//! bounded by 1 on the closed unit ball stays below 1 for `|q| <= 1/6`
//! (weak form) and `|q| <= 1/3` (sharp form), through the coefficient
//! bounds `|a_n| < 2^{n+1}(1 - a_0)` and `|a_n| < 1 - a_0^2`.

use crate::quaternion::Quaternion;
use crate::series::QSeries;

use super::admissible::AdmissibleFunction;
use super::report::{Tally, VerificationReport};

pub const WEAK_BOHR_RADIUS: f64 = 1.0 / 6.0;
pub const BOHR_RADIUS: f64 = 1.0 / 3.0;

/// Right-multiplies by `conj(a_0)/|a_0|` so that the constant term becomes
/// `|a_0|`. Coefficient moduli are unchanged.
pub fn normalize_leading(f: &QSeries) -> QSeries {
    let a0 = f.coeff(0);
    let m = a0.modulus();
    if m == 0.0 {
        return f.clone();
    }
    let mut coeffs = f.right_mul(a0.conj() / m).into_coeffs();
    // exact real constant term; the product leaves rounding-level imaginary parts
    coeffs[0] = Quaternion::real(m);
    QSeries::new(coeffs)
}

/// Smallest slack `bound(n, a_0) - |a_n|` over `1 <= n <= max(N, 1)`, after
/// normalization.
fn coefficient_margin(f: &QSeries, bound: impl Fn(usize, f64) -> f64) -> f64 {
    let a0 = f.coeff(0).modulus();
    (1..=f.degree().max(1)).map(|n| bound(n, a0) - f.coeff(n).modulus()).fold(f64::INFINITY, f64::min)
}

pub(crate) fn weak_bound(n: usize, a0: f64) -> f64 {
    2f64.powi(n as i32 + 1) * (1.0 - a0)
}

pub(crate) fn sharp_bound(_n: usize, a0: f64) -> f64 {
    1.0 - a0 * a0
}

pub(crate) fn weak_margins(f: &AdmissibleFunction) -> (f64, f64) {
    let g = normalize_leading(&f.series);
    (1.0 - f.majorant_with_tail(WEAK_BOHR_RADIUS), coefficient_margin(&g, weak_bound))
}

pub(crate) fn sharp_coefficient_margin(f: &AdmissibleFunction) -> f64 {
    coefficient_margin(&normalize_leading(&f.series), sharp_bound)
}

pub(crate) fn sharp_majorant_margin(f: &AdmissibleFunction) -> f64 {
    1.0 - f.majorant_with_tail(BOHR_RADIUS)
}

fn single(theorem: &'static str, f: &AdmissibleFunction, tol: f64, margins: &[(&str, f64)]) -> VerificationReport {
    let mut tally = Tally::new(theorem, tol);
    let worst = margins.iter().map(|m| m.1).fold(f64::INFINITY, f64::min);
    tally.record(worst, || f.series.clone());
    for &(name, m) in margins {
        tally.min_metric(name, m);
    }
    tally.finish(f.provenance.seed, &[])
}

/// Majorant at `1/6` below 1 and `|a_n| < 2^{n+1}(1 - a_0)`.
pub fn verify_weak_bohr(f: &AdmissibleFunction, tol: f64) -> VerificationReport {
    let (maj, coef) = weak_margins(f);
    single("weak-bohr", f, tol, &[("majorant_margin", maj), ("coefficient_margin", coef)])
}

/// `|a_n| < 1 - a_0^2` for every `n >= 1`, after normalization.
pub fn verify_sharp_coefficient_bound(f: &AdmissibleFunction, tol: f64) -> VerificationReport {
    single("sharp-coefficient-bound", f, tol, &[("coefficient_margin", sharp_coefficient_margin(f))])
}

/// Majorant at `1/3` below 1.
pub fn verify_sharp_bohr(f: &AdmissibleFunction, tol: f64) -> VerificationReport {
    single("sharp-bohr", f, tol, &[("majorant_margin", sharp_majorant_margin(f))])
}

/// Largest `r` in `[0, 1]` with majorant (plus known tail) below 1, by
/// bisection to width `tol`. Returns 1 when the majorant stays below 1 on
/// the whole unit ball, and otherwise the lower end of the final bracket.
pub fn bohr_radius_estimate(f: &AdmissibleFunction, tol: f64) -> f64 {
    let m = |r: f64| f.majorant_with_tail(r);
    if m(1.0) < 1.0 {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > tol.max(f64::EPSILON) {
        let mid = 0.5 * (lo + hi);
        if m(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;
    use crate::theorems::admissible::{corpus_function, Generator, Provenance, Tail};

    fn wrap(series: QSeries) -> AdmissibleFunction {
        AdmissibleFunction {
            certified_sup: series.majorant_sum(1.0),
            series,
            provenance: Provenance { generator: Generator::G1, seed: 0, index: None },
            tail: Tail::None,
        }
    }

    #[test]
    fn normalization_examples() {
        let f = QSeries::from_real(&[0.5, -0.2, 0.1]);
        assert_eq!(normalize_leading(&f), f);

        let f = QSeries::new(vec![Quaternion::I * 0.5, Quaternion::J * 0.3, Quaternion::new(0.1, 0.2, 0.0, -0.1)]);
        let g = normalize_leading(&f);
        assert_eq!(g.coeff(0), Quaternion::real(0.5));
        for n in 0..=2 {
            assert!((g.coeff(n).modulus() - f.coeff(n).modulus()).abs() < 1e-15);
        }

        let mut rng = seeded(3);
        for _ in 0..20 {
            let f = QSeries::new((0..9).map(|_| Quaternion::random_gaussian(&mut rng)).collect());
            let g = normalize_leading(&f);
            assert!((f.majorant_sum(0.7) - g.majorant_sum(0.7)).abs() < 1e-14);
            assert!(g.coeff(0).w >= 0.0 && g.coeff(0).im_modulus() == 0.0);
        }
        let z = QSeries::new(vec![Quaternion::ZERO, Quaternion::J]);
        assert_eq!(normalize_leading(&z), z);
    }

    #[test]
    fn weak_bohr_examples() {
        let c = wrap(QSeries::constant(Quaternion::new(0.3, 0.4, 0.0, 0.0)));
        let r = verify_weak_bohr(&c, 1e-9);
        assert!(r.passed());
        assert!((r.metric("majorant_margin").unwrap() - 0.5).abs() < 1e-15);

        let phi = AdmissibleFunction::phi(0.5, 0.6);
        let r = verify_weak_bohr(&phi, 1e-9);
        let closed = 0.6 * (1.0 + (1.0 / 6.0) * 0.5 / (1.0 - 0.5 / 6.0));
        assert!((1.0 - r.metric("majorant_margin").unwrap() - closed).abs() < 1e-12);
        assert!((closed - 0.6 * 12.0 / 11.0).abs() < 1e-15);
        assert!(r.passed());
    }

    #[test]
    fn sharp_coefficient_examples() {
        let phi = AdmissibleFunction::phi(0.5, 0.6);
        // a_0 = 0.6, |a_1| = 0.3, bound 0.64
        assert!((phi.series.coeff(1).w + 0.3).abs() < 1e-15);
        let r = verify_sharp_coefficient_bound(&phi, 1e-9);
        assert!(r.passed());
        assert!((r.worst_margin - (0.64 - 0.3)).abs() < 1e-12);

        let c = wrap(QSeries::constant(Quaternion::real(0.9)));
        let r = verify_sharp_coefficient_bound(&c, 1e-9);
        assert!(r.passed());
        assert!((r.worst_margin - 0.19).abs() < 1e-12);
    }

    #[test]
    fn sharp_bohr_examples() {
        let c = 0.99 * 1.9 / 2.0;
        assert!((c - 0.9405f64).abs() < 1e-15);
        let phi = AdmissibleFunction::phi(0.9, c);
        let r = verify_sharp_bohr(&phi, 1e-9);
        let closed = c * (1.0 + (1.0 / 3.0) * 0.1 / (1.0 - 0.3));
        assert!((closed - c * 22.0 / 21.0).abs() < 1e-15);
        assert!((1.0 - r.worst_margin - closed).abs() < 1e-12);
        assert!(r.passed());
        assert!(verify_sharp_bohr(&wrap(QSeries::constant(Quaternion::real(-0.7))), 1e-9).passed());
    }

    #[test]
    fn radius_examples() {
        assert_eq!(bohr_radius_estimate(&wrap(QSeries::constant(Quaternion::real(0.5))), 1e-12), 1.0);
        // 0.72 (1 + r/2 / (1 - r/2)) = 1  <=>  r = 0.56
        let oracle = {
            let (a, c) = (0.5f64, 0.72f64);
            let k = 1.0 / c - 1.0;
            k / (1.0 - a + k * a)
        };
        assert!((oracle - 0.56).abs() < 1e-15);
        let est = bohr_radius_estimate(&AdmissibleFunction::phi(0.5, 0.72), 1e-13);
        assert!((est - oracle).abs() < 1e-12, "{est}");
    }

    #[test]
    fn bound_ordering_on_corpus() {
        for index in 0..100 {
            let f = corpus_function(11, index, None);
            let a0 = f.series.coeff(0).modulus();
            assert!(sharp_bound(1, a0) < 2.0 * (1.0 - a0));
            assert!(2.0 * (1.0 - a0) <= weak_bound(1, a0));
            // the sharp chain implies the weak one
            if sharp_majorant_margin(&f) > 0.0 {
                assert!(weak_margins(&f).0 > 0.0);
            }
        }
    }
}
