//! Quaternionic fractional linear transformations
//! `L(q) = (q a + b)^{-1} (q c + d)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

const POLE_TOL: f64 = 1e-14;

/// Dieudonne determinant of `[[a, b], [c, d]]`:
/// `sqrt(|a|^2 |d|^2 + |c|^2 |b|^2 - 2 Re(c conj(a) b conj(d)))`.
pub fn dieudonne_det(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> f64 {
    let radicand = a.norm_sqr() * d.norm_sqr() + c.norm_sqr() * b.norm_sqr() - 2.0 * (c * a.conj() * b * d.conj()).re();
    // rounding can push an exact zero slightly negative
    radicand.max(0.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MobiusMap {
    a: Quaternion,
    b: Quaternion,
    c: Quaternion,
    d: Quaternion,
}

impl MobiusMap {
    /// Rejects singular matrices. The determinant is compared against the
    /// rounding scale of its own terms.
    pub fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Result<Self> {
        let det = dieudonne_det(a, b, c, d);
        let scale = a.modulus() * d.modulus() + b.modulus() * c.modulus();
        if det.is_nan() || det <= 1e-7 * scale {
            return Err(Error::Singular(det));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self { a: Quaternion::ZERO, b: Quaternion::ONE, c: Quaternion::ONE, d: Quaternion::ZERO }
    }

    pub fn coefficients(&self) -> [Quaternion; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> f64 {
        dieudonne_det(self.a, self.b, self.c, self.d)
    }

    pub fn apply(&self, q: Quaternion) -> Result<Quaternion> {
        let den = q * self.a + self.b;
        let m = den.modulus();
        if m <= POLE_TOL {
            return Err(Error::Pole(m));
        }
        Ok(den.inverse()? * (q * self.c + self.d))
    }
}

/// `g(q) = (q + conj(w0))^{-1} (q - w0)`: sends `w0` to 0 and the
/// hyperplane `Re q = 0` onto the unit 3-sphere.
pub fn cayley_map(w0: Quaternion) -> Result<MobiusMap> {
    if w0.re() == 0.0 {
        return Err(Error::DegenerateCayley);
    }
    MobiusMap::new(Quaternion::ONE, w0.conj(), Quaternion::ONE, -w0)
}

/// `q -> (1 - q a0)^{-1} (q - a0)`, mapping the closed unit ball into itself.
pub fn disk_map(a0: f64) -> Result<MobiusMap> {
    if !(0.0..1.0).contains(&a0) {
        return Err(Error::DiskParameter(a0));
    }
    MobiusMap::new(Quaternion::real(-a0), Quaternion::ONE, Quaternion::ONE, Quaternion::real(-a0))
}
