use rand::Rng;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::rng::seeded;
use crate::series::{golden_max, QSeries};

use super::report::{Tally, VerificationReport};

/// `max_{|q - q0| = r} |Re f(q)|` for real `q0`. On each 2-sphere
/// `x + y S` the maximum over the unit is closed-form, which leaves a search
/// over the polar angle: a uniform grid of `grid` angles refined by
/// golden-section search around the best one.
pub fn max_abs_real_part(f: &QSeries, q0: f64, r: f64, grid: usize) -> f64 {
    let grid = grid.max(8);
    let h = |t: f64| f.sphere_max_abs_re(q0 + r * t.cos(), r * t.sin());
    let step = std::f64::consts::PI / grid as f64;
    let (mut best_t, mut best) = (0.0, f64::NEG_INFINITY);
    for k in 0..=grid {
        let t = k as f64 * step;
        let v = h(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    let lo = (best_t - step).max(0.0);
    let hi = (best_t + step).min(std::f64::consts::PI);
    best.max(h(golden_max(h, lo, hi, best_t, 60)))
}

fn is_constant(f: &QSeries) -> bool {
    f.coeffs()[1..].iter().all(|a| a.norm_sqr() == 0.0)
}

/// Checks `|f(q)| <= |gamma| + |beta| (r + rho)/(r - rho) + 2 A rho/(r - rho)`
/// on `|q - q0| <= rho`, where `A = max_{|q - q0| = r} |Re f|` and
/// `f(q0) = beta + gamma I`.
///
/// Test points: `samples` uniform points of the closed ball of radius `rho`,
/// `samples` uniform points of its boundary sphere, and for `samples` polar
/// angles the maximizing point of each boundary 2-sphere. Each point is one
/// trial.
pub fn verify_borel_caratheodory(
    f: &QSeries,
    q0: Quaternion,
    r: f64,
    rho: f64,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    if q0.im_modulus() > 0.0 {
        return Err(Error::NonRealCenter(q0.im_modulus()));
    }
    if !(rho > 0.0 && rho < r) {
        return Err(Error::InvalidArgument(format!("need 0 < rho < r, got rho = {rho}, r = {r}")));
    }
    let center = f.evaluate(q0);
    let (beta, gamma) = (center.re(), center.im_modulus());
    let tolerances = [("r", r), ("rho", rho)];
    let mut tally = Tally::new("borel-caratheodory", tol);

    if is_constant(f) {
        tally.min_metric("A", center.re().abs());
        tally.record(gamma.abs() + beta.abs() - center.modulus(), || f.clone());
        return Ok(tally.finish(seed, &tolerances));
    }

    let a = max_abs_real_part(f, q0.w, r, samples.max(256));
    let bound = gamma.abs() + beta.abs() * (r + rho) / (r - rho) + 2.0 * a * rho / (r - rho);
    tally.min_metric("A", a);
    tally.min_metric("bound", bound);

    let mut rng = seeded(seed);
    let mut observed = 0.0f64;
    let mut check = |q: Quaternion, tally: &mut Tally| {
        let m = f.evaluate(q).modulus();
        observed = observed.max(m);
        tally.record(bound - m, || f.clone());
    };
    for _ in 0..samples {
        let u = Quaternion::random_unit(&mut rng);
        let s: f64 = rng.random_range(0.0..1.0);
        check(q0 + u * (rho * s.powf(0.25)), &mut tally);
        check(q0 + u * rho, &mut tally);
    }
    for k in 0..samples {
        let t = std::f64::consts::PI * k as f64 / (samples.max(2) - 1) as f64;
        let (x, y) = (q0.w + rho * t.cos(), rho * t.sin());
        let (_, unit) = f.sphere_max_modulus(x, y);
        check(unit.slice_point(x, y), &mut tally);
    }
    let mut report = tally.finish(seed, &tolerances);
    report.metrics.insert("max_observed_modulus".into(), observed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function_passes() {
        let f = QSeries::constant(Quaternion::new(0.3, -0.4, 0.2, 0.1));
        let r = verify_borel_caratheodory(&f, Quaternion::ZERO, 1.0, 0.5, 10, 1, 1e-9).unwrap();
        assert!(r.passed());
        assert!(r.worst_margin >= 0.0);
    }

    #[test]
    fn identity_function_hand_values() {
        let f = QSeries::from_real(&[0.0, 1.0]);
        let r = verify_borel_caratheodory(&f, Quaternion::ZERO, 1.0, 0.5, 200, 2, 1e-9).unwrap();
        assert!(r.passed());
        assert!((r.metric("A").unwrap() - 1.0).abs() < 1e-12);
        assert!((r.metric("bound").unwrap() - 2.0).abs() < 1e-12);
        assert!((r.metric("max_observed_modulus").unwrap() - 0.5).abs() < 1e-12);
        assert!((r.worst_margin - 1.5).abs() < 1e-12);
    }

    #[test]
    fn real_part_max_against_brute_force() {
        let f = QSeries::new(vec![
            Quaternion::new(0.1, 0.3, -0.2, 0.0),
            Quaternion::new(-0.4, 0.1, 0.5, 0.2),
            Quaternion::new(0.2, -0.3, 0.1, 0.4),
        ]);
        let exact = max_abs_real_part(&f, 0.0, 1.0, 512);
        let mut rng = seeded(5);
        let brute = (0..200_000).map(|_| f.evaluate(Quaternion::random_unit(&mut rng)).re().abs()).fold(0.0, f64::max);
        assert!(exact >= brute - 1e-12);
        assert!(exact - brute < 1e-2);
    }

    #[test]
    fn domain_errors() {
        let f = QSeries::from_real(&[0.0, 1.0]);
        assert!(matches!(
            verify_borel_caratheodory(&f, Quaternion::I, 1.0, 0.5, 10, 1, 1e-9),
            Err(Error::NonRealCenter(_))
        ));
        assert!(matches!(
            verify_borel_caratheodory(&f, Quaternion::ZERO, 1.0, 1.0, 10, 1, 1e-9),
            Err(Error::InvalidArgument(_))
        ));
    }
}
