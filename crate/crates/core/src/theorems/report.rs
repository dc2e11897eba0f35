use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::series::QSeries;

/// Outcome of checking one theorem over one or more trials.
///
/// Margins are signed slack (`bound - observed`); a trial is a violation
/// when its margin is below `-tol`. Strict inequalities show up as a
/// positive `worst_margin`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub trials: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<QSeries>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub metrics: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn metric(&self, name: &str) -> Option<f64> {
        self.metrics.get(name).copied()
    }
}

/// Running min-margin bookkeeping for one report.
#[derive(Debug, Clone)]
pub(crate) struct Tally {
    theorem: &'static str,
    tol: f64,
    trials: usize,
    violations: usize,
    worst: f64,
    worst_witness: Option<QSeries>,
    metrics: BTreeMap<String, f64>,
}

impl Tally {
    pub fn new(theorem: &'static str, tol: f64) -> Self {
        Self {
            theorem,
            tol,
            trials: 0,
            violations: 0,
            worst: f64::INFINITY,
            worst_witness: None,
            metrics: BTreeMap::new(),
        }
    }

    /// Records one trial. `witness` is kept only for violating trials.
    pub fn record(&mut self, margin: f64, witness: impl FnOnce() -> QSeries) {
        self.trials += 1;
        let violated = margin.is_nan() || margin < -self.tol;
        if violated {
            self.violations += 1;
        }
        if margin < self.worst || margin.is_nan() {
            self.worst = margin;
            if violated {
                self.worst_witness = Some(witness());
            }
        }
    }

    /// Keeps the minimum of a named metric.
    pub fn min_metric(&mut self, name: &str, value: f64) {
        let slot = self.metrics.entry(name.to_string()).or_insert(f64::INFINITY);
        if value < *slot {
            *slot = value;
        }
    }

    pub fn finish(self, seed: u64, extra_tolerances: &[(&str, f64)]) -> VerificationReport {
        let mut tolerances: BTreeMap<String, f64> = extra_tolerances.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        tolerances.insert("tol".into(), self.tol);
        VerificationReport {
            theorem: self.theorem.to_string(),
            trials: self.trials,
            violations: self.violations,
            worst_margin: self.worst,
            seed,
            tolerances,
            witness: self.worst_witness,
            metrics: self.metrics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_counts_against_tolerance() {
        let mut t = Tally::new("demo", 1e-9);
        t.record(0.5, QSeries::one);
        t.record(-1e-10, QSeries::one);
        t.record(-1e-3, || QSeries::constant(crate::Quaternion::I));
        t.min_metric("m", 2.0);
        t.min_metric("m", 1.0);
        let r = t.finish(7, &[("radius", 0.25)]);
        assert_eq!((r.trials, r.violations), (3, 1));
        assert_eq!(r.worst_margin, -1e-3);
        assert_eq!(r.witness, Some(QSeries::constant(crate::Quaternion::I)));
        assert_eq!(r.metric("m"), Some(1.0));
        assert_eq!(r.tolerances["tol"], 1e-9);

        let json = serde_json::to_value(&r).unwrap();
        for key in ["theorem", "trials", "violations", "worst_margin", "seed", "tolerances", "witness"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
}
