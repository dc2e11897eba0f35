//! Corpus runs: a check applied to `trials` generated functions, each drawn
//! from its own `(seed, index)` stream, so a report does not depend on how
//! trials are scheduled.

use serde::{Deserialize, Serialize};

use crate::quaternion::Quaternion;
use crate::rng::trial_rng;
use crate::series::QSeries;

use super::admissible::{corpus_function, AdmissibleFunction, Generator};
use super::bohr::{
    bohr_radius_estimate, sharp_bound, sharp_coefficient_margin, sharp_majorant_margin, weak_bound, weak_margins,
    BOHR_RADIUS,
};
use super::borel::verify_borel_caratheodory;
use super::report::{Tally, VerificationReport};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 256;
pub const DEFAULT_RHOS: [f64; 3] = [0.25, 0.5, 0.75];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Borel-Caratheodory at `q0 = 0`, `r = 1`, for each configured `rho`.
    Bc,
    WeakBohr,
    SharpBohr,
    /// Sharp and weak coefficient bounds plus their ordering.
    CoeffBounds,
    /// Empirical Bohr radius against 1/3.
    Radius,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Bc => "borel-caratheodory",
            Check::WeakBohr => "weak-bohr",
            Check::SharpBohr => "sharp-bohr",
            Check::CoeffBounds => "coeff-bounds",
            Check::Radius => "bohr-radius",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarnessConfig {
    pub trials: usize,
    pub seed: u64,
    /// `None` alternates G1 and G2.
    pub generator: Option<Generator>,
    pub tol: f64,
    /// Test points per Borel-Caratheodory check.
    pub samples: usize,
    pub rhos: Vec<f64>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 0,
            generator: None,
            tol: DEFAULT_TOL,
            samples: DEFAULT_SAMPLES,
            rhos: DEFAULT_RHOS.to_vec(),
        }
    }
}

/// Margins produced by one function: `(margin, named metrics)`.
struct TrialResult {
    series: AdmissibleFunction,
    margins: Vec<f64>,
    metrics: Vec<(&'static str, f64)>,
}

fn run_trial(check: Check, cfg: &HarnessConfig, index: u64) -> TrialResult {
    let f = corpus_function(cfg.seed, index, cfg.generator);
    let mut margins = Vec::new();
    let mut metrics = Vec::new();
    match check {
        Check::Bc => {
            let point_seed = rand::Rng::random(&mut trial_rng(cfg.seed ^ 0xb0_4e1, index));
            for &rho in &cfg.rhos {
                let report =
                    verify_borel_caratheodory(&f.series, Quaternion::ZERO, 1.0, rho, cfg.samples, point_seed, cfg.tol)
                        .expect("valid center and radii");
                margins.push(report.worst_margin);
                metrics.push(("min_relative_slack", report.worst_margin / report.metric("bound").unwrap_or(1.0)));
            }
        }
        Check::WeakBohr => {
            let (maj, coef) = weak_margins(&f);
            margins.extend([maj, coef]);
            metrics.extend([("min_majorant_margin", maj), ("min_coefficient_margin", coef)]);
        }
        Check::SharpBohr => {
            let maj = sharp_majorant_margin(&f);
            margins.push(maj);
            metrics.push(("min_majorant_margin", maj));
        }
        Check::CoeffBounds => {
            let sharp = sharp_coefficient_margin(&f);
            let weak = weak_margins(&f).1;
            let a0 = f.series.coeff(0).modulus();
            // sharp bound strictly below the weak one at every n
            let ordering = weak_bound(1, a0) - sharp_bound(1, a0);
            margins.extend([sharp, weak]);
            metrics.extend([("min_sharp_margin", sharp), ("min_weak_margin", weak), ("min_bound_gap", ordering)]);
        }
        Check::Radius => {
            let r = bohr_radius_estimate(&f, 1e-12);
            margins.push(r - BOHR_RADIUS);
            metrics.push(("min_radius", r));
        }
    }
    TrialResult { series: f, margins, metrics }
}

#[cfg(feature = "parallel")]
fn collect_trials(check: Check, cfg: &HarnessConfig) -> Vec<TrialResult> {
    use rayon::prelude::*;
    (0..cfg.trials as u64).into_par_iter().map(|i| run_trial(check, cfg, i)).collect()
}

#[cfg(not(feature = "parallel"))]
fn collect_trials(check: Check, cfg: &HarnessConfig) -> Vec<TrialResult> {
    (0..cfg.trials as u64).map(|i| run_trial(check, cfg, i)).collect()
}

/// Runs `check` over the corpus. Each function counts as one trial with
/// the smallest of its margins.
pub fn run_check(check: Check, cfg: &HarnessConfig) -> VerificationReport {
    let mut tally = Tally::new(check.name(), cfg.tol);
    for trial in collect_trials(check, cfg) {
        let worst = trial.margins.iter().copied().fold(f64::INFINITY, f64::min);
        let series: &QSeries = &trial.series.series;
        tally.record(worst, || series.clone());
        for (name, v) in trial.metrics {
            tally.min_metric(name, v);
        }
    }
    let extra: Vec<(String, f64)> = match check {
        Check::Bc => cfg.rhos.iter().enumerate().map(|(k, &r)| (format!("rho{k}"), r)).collect(),
        Check::WeakBohr => vec![("radius".into(), 1.0 / 6.0)],
        Check::SharpBohr | Check::Radius => vec![("radius".into(), BOHR_RADIUS)],
        Check::CoeffBounds => vec![],
    };
    let extra: Vec<(&str, f64)> = extra.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    tally.finish(cfg.seed, &extra)
}
