use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::quaternion::Quaternion;
use crate::rng::{seeded, trial_rng};
use crate::series::{QSeries, DEFAULT_DEGREE};

/// Shrink factor for the polynomial generator: its majorant at `r = 1` is
/// exactly `1 - G1_DELTA`.
pub const G1_DELTA: f64 = 0.01;
pub const G1_MAX_DEGREE: usize = 32;
/// Target bound on the dropped tail `c a^N` of a truncated `phi_c`.
pub const PHI_TAIL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    /// Random polynomial of degree at most 32 scaled by its majorant.
    G1,
    /// `c (1 - q a)^{-1} (1 - q)` times a random unit on the right.
    G2,
}

impl std::str::FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g1" => Ok(Generator::G1),
            "g2" => Ok(Generator::G2),
            other => Err(format!("unknown generator {other:?} (expected g1 or g2)")),
        }
    }
}

/// Majorant of the coefficients dropped by truncation, when they are known.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    None,
    /// Tail of `c b_n` with `|b_n| = (1 - a) a^{n-1}`.
    Phi {
        a: f64,
        c: f64,
    },
}

impl Tail {
    /// `sum_{n > degree} r^n |a_n|` of the untruncated function.
    pub fn bound(&self, degree: usize, r: f64) -> f64 {
        match *self {
            Tail::None => 0.0,
            Tail::Phi { a, c } => {
                let ra = r * a;
                if ra >= 1.0 {
                    return f64::INFINITY;
                }
                c * (1.0 - a) * r * ra.powi(degree as i32) / (1.0 - ra)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: Generator,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<u64>,
}

/// A series together with a certified bound `sup_{|q| <= 1} |f| <= certified_sup < 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdmissibleFunction {
    pub series: QSeries,
    pub certified_sup: f64,
    pub provenance: Provenance,
    pub tail: Tail,
}

impl AdmissibleFunction {
    /// Majorant at radius `r`, including the known truncation tail.
    pub fn majorant_with_tail(&self, r: f64) -> f64 {
        self.series.majorant_sum(r) + self.tail.bound(self.series.degree(), r)
    }

    /// `phi_c(q) = c (1 - q a)^{-1} (1 - q)`, truncated so that `c a^N` stays
    /// below [`PHI_TAIL_EPS`]. The certified sup is `2c/(1+a) + c a^N`.
    pub fn phi(a: f64, c: f64) -> Self {
        let degree = phi_degree(a);
        let series = phi_series(a, c, degree);
        Self {
            certified_sup: 2.0 * c / (1.0 + a) + c * a.powi(degree as i32),
            series,
            provenance: Provenance { generator: Generator::G2, seed: 0, index: None },
            tail: Tail::Phi { a, c },
        }
    }
}

/// Coefficients `c b_n` with `b_0 = 1`, `b_n = (a - 1) a^{n-1}`.
pub fn phi_series(a: f64, c: f64, degree: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(Quaternion::real(c));
    let mut p = 1.0;
    for _ in 1..=degree {
        coeffs.push(Quaternion::real(c * (a - 1.0) * p));
        p *= a;
    }
    QSeries::new(coeffs)
}

/// Smallest degree `N >= 64` with `a^N <= PHI_TAIL_EPS`.
pub fn phi_degree(a: f64) -> usize {
    if a <= 0.0 {
        return DEFAULT_DEGREE;
    }
    let n = (PHI_TAIL_EPS.ln() / a.ln()).ceil();
    (n as usize).max(DEFAULT_DEGREE)
}

fn generate_with<R: Rng + ?Sized>(rng: &mut R, generator: Generator) -> (QSeries, f64, Tail) {
    match generator {
        Generator::G1 => {
            let degree = rng.random_range(0..=G1_MAX_DEGREE);
            let h = QSeries::new((0..=degree).map(|_| Quaternion::random_gaussian(rng)).collect());
            let total = h.majorant_sum(1.0);
            let f = h.scale((1.0 - G1_DELTA) / total);
            (f, 1.0 - G1_DELTA, Tail::None)
        }
        Generator::G2 => {
            let a = rng.random_range(0.1..0.9);
            let sup = rng.random_range(0.5..0.99);
            let c = sup * (1.0 + a) / 2.0;
            let u = Quaternion::random_unit(rng);
            let phi = AdmissibleFunction::phi(a, c);
            (phi.series.right_mul(u), phi.certified_sup, phi.tail)
        }
    }
}

/// One admissible function from `seed`.
pub fn generate_admissible(seed: u64, generator: Generator) -> AdmissibleFunction {
    let (series, certified_sup, tail) = generate_with(&mut seeded(seed), generator);
    AdmissibleFunction { series, certified_sup, provenance: Provenance { generator, seed, index: None }, tail }
}

/// Function number `index` of the corpus under `seed`. With no generator
/// given, even indices use G1 and odd indices G2.
pub fn corpus_function(seed: u64, index: u64, generator: Option<Generator>) -> AdmissibleFunction {
    let generator = generator.unwrap_or(if index.is_multiple_of(2) { Generator::G1 } else { Generator::G2 });
    let (series, certified_sup, tail) = generate_with(&mut trial_rng(seed, index), generator);
    AdmissibleFunction { series, certified_sup, provenance: Provenance { generator, seed, index: Some(index) }, tail }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_is_scaled_to_its_majorant() {
        for seed in 0..50 {
            let f = generate_admissible(seed, Generator::G1);
            assert!((f.series.majorant_sum(1.0) - (1.0 - G1_DELTA)).abs() < 1e-14);
            assert!(f.certified_sup <= 0.99);
            assert!(f.series.degree() <= G1_MAX_DEGREE);
        }
    }

    #[test]
    fn phi_family_values() {
        let f = AdmissibleFunction::phi(0.5, 0.6);
        assert!((f.certified_sup - 0.8).abs() < 1e-15);
        assert_eq!(f.series.degree(), 64);
        let f = AdmissibleFunction::phi(0.9, 0.9);
        assert!(0.9f64.powi(f.series.degree() as i32) <= PHI_TAIL_EPS);
    }

    #[test]
    fn phi_tail_matches_longer_truncation() {
        let (a, c) = (0.7, 0.8);
        let short = phi_series(a, c, 20);
        let long = phi_series(a, c, 400);
        let tail = Tail::Phi { a, c };
        for r in [0.3, 0.9, 1.0] {
            let want = long.majorant_sum(r) - short.majorant_sum(r);
            assert!((tail.bound(20, r) - want).abs() < 1e-13, "r={r}");
        }
    }

    #[test]
    fn certified_sup_dominates_sampled_sup() {
        for index in 0..40 {
            let f = corpus_function(7, index, None);
            assert!(f.certified_sup < 1.0);
            let sampled = f.series.sup_modulus_on_sphere(1.0, 200, index);
            assert!(f.certified_sup >= sampled - 1e-12, "{index}: {} < {sampled}", f.certified_sup);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = serde_json::to_string(&corpus_function(3, 5, None)).unwrap();
        let b = serde_json::to_string(&corpus_function(3, 5, None)).unwrap();
        assert_eq!(a, b);
        assert_eq!(generate_admissible(4, Generator::G2), generate_admissible(4, Generator::G2));
        assert_eq!(corpus_function(3, 4, None).provenance.generator, Generator::G1);
        assert_eq!(corpus_function(3, 5, None).provenance.generator, Generator::G2);
    }
}
