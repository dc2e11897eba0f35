//! Functions showing that no radius beyond 1/3 works: for `|q0| > 1/3`, a
//! member of `phi_c(q) = c (1 - q a)^{-1} (1 - q)` with sup below 1 on the
//! unit ball whose majorant at `q0` exceeds 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::series::QSeries;

use super::admissible::{phi_degree, phi_series, AdmissibleFunction, Generator, Provenance, Tail};
use super::bohr::BOHR_RADIUS;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessWitness {
    pub a: f64,
    pub c: f64,
    pub q0: Quaternion,
    pub series: QSeries,
    /// `c (1 + |q0|(1 - a)/(1 - |q0| a))`, the majorant of the untruncated
    /// function at `|q0|`.
    pub majorant_at_q0: f64,
    /// `2c / (1 + a)`, the maximum modulus on the closed unit ball.
    pub sup_bound: f64,
}

/// `1 + r (1 - a)/(1 - r a)`: majorant of `phi` at radius `r`.
pub fn phi_majorant(a: f64, r: f64) -> f64 {
    1.0 + r * (1.0 - a) / (1.0 - r * a)
}

fn check_point(q0: Quaternion) -> Result<f64> {
    let m = q0.modulus();
    if !(m > BOHR_RADIUS && m < 1.0) {
        return Err(Error::NoWitness(m));
    }
    Ok(m)
}

/// Witness with the fixed parameter rule: `a` halfway between
/// `(1/|q0| - 1)/2` and 1 (so that `1/(1 + 2a) < |q0|`), then `c` halfway
/// between `1/S` and `(1 + a)/2`, where `S` is the majorant of `phi` at `|q0|`.
pub fn sharpness_witness(q0: Quaternion) -> Result<SharpnessWitness> {
    let m = check_point(q0)?;
    let a = 0.5 * ((1.0 / m - 1.0) / 2.0 + 1.0);
    let s = phi_majorant(a, m);
    let c = 0.5 * (1.0 / s + (1.0 + a) / 2.0);
    SharpnessWitness::with_parameters(q0, a, c)
}

impl SharpnessWitness {
    /// Witness for explicit `(a, c)`; fails unless majorant at `q0` > 1 > sup.
    pub fn with_parameters(q0: Quaternion, a: f64, c: f64) -> Result<Self> {
        let m = check_point(q0)?;
        if !(a > 0.0 && a < 1.0 && c > 0.0 && c < 1.0) {
            return Err(Error::InvalidArgument(format!("need a, c in (0, 1), got a = {a}, c = {c}")));
        }
        let majorant_at_q0 = c * phi_majorant(a, m);
        let sup_bound = 2.0 * c / (1.0 + a);
        if !(majorant_at_q0 > 1.0 && sup_bound < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "(a, c) = ({a}, {c}) is not a witness at |q0| = {m}: majorant {majorant_at_q0}, sup {sup_bound}"
            )));
        }
        Ok(Self { a, c, q0, series: phi_series(a, c, phi_degree(a)), majorant_at_q0, sup_bound })
    }

    /// The witness as a member of the admissible class, certified sup
    /// including the truncation tail.
    pub fn admissible(&self) -> AdmissibleFunction {
        let degree = self.series.degree();
        AdmissibleFunction {
            series: self.series.clone(),
            certified_sup: self.sup_bound + self.c * self.a.powi(degree as i32),
            provenance: Provenance { generator: Generator::G2, seed: 0, index: None },
            tail: Tail::Phi { a: self.a, c: self.c },
        }
    }
}
