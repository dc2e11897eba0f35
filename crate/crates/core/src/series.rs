//! Truncated quaternionic power series `f(q) = sum_{n=0}^{N} q^n a_n`
//! centered at the origin, coefficients on the right.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, UnitImaginary};
use crate::rng::seeded;

/// Default truncation degree for harness-generated functions.
pub const DEFAULT_DEGREE: usize = 64;

/// Power series `sum q^n a_n` truncated at an explicit degree `N`.
///
/// Always holds `N + 1` coefficients; trailing zeros are kept so the
/// truncation degree survives arithmetic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct QSeries {
    coeffs: Vec<Quaternion>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    degree: usize,
    coeffs: Vec<Quaternion>,
}

impl TryFrom<SeriesRepr> for QSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.degree + 1 {
            return Err(Error::InvalidSeries(format!(
                "degree {} requires {} coefficients, got {}",
                r.degree,
                r.degree + 1,
                r.coeffs.len()
            )));
        }
        if r.coeffs.iter().any(|c| !c.to_array().iter().all(|v| v.is_finite())) {
            return Err(Error::InvalidSeries("non-finite coefficient".into()));
        }
        Ok(QSeries { coeffs: r.coeffs })
    }
}

impl From<QSeries> for SeriesRepr {
    fn from(s: QSeries) -> Self {
        SeriesRepr { degree: s.degree(), coeffs: s.coeffs }
    }
}

impl QSeries {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Quaternion>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn zeros(degree: usize) -> Self {
        Self { coeffs: vec![Quaternion::ZERO; degree + 1] }
    }

    pub fn constant(c: Quaternion) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::ONE)
    }

    /// Series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Quaternion::real(c)).collect())
    }

    /// `q^n a`.
    pub fn monomial(n: usize, a: Quaternion) -> Self {
        let mut s = Self::zeros(n);
        s.coeffs[n] = a;
        s
    }

    /// `a_n = a^n` for `n <= degree`.
    pub fn geometric(a: f64, degree: usize) -> Self {
        let mut p = 1.0;
        let coeffs = (0..=degree)
            .map(|_| {
                let c = Quaternion::real(p);
                p *= a;
                c
            })
            .collect();
        Self { coeffs }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidSeries(e.to_string()))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Quaternion> {
        self.coeffs
    }

    /// `a_n`, zero past the truncation degree.
    #[inline]
    pub fn coeff(&self, n: usize) -> Quaternion {
        self.coeffs.get(n).copied().unwrap_or(Quaternion::ZERO)
    }

    /// Keeps degrees `0..=degree`, zero-padding if needed.
    pub fn truncated(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, Quaternion::ZERO);
        Self { coeffs }
    }

    pub fn map_coeffs(&self, f: impl FnMut(&Quaternion) -> Quaternion) -> Self {
        Self { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn map_coeffs_indexed(&self, mut f: impl FnMut(usize, &Quaternion) -> Quaternion) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(k, a)| f(k, a)).collect() }
    }

    /// Multiplies every coefficient by `u` on the right, i.e. `f(q) u`.
    pub fn right_mul(&self, u: Quaternion) -> Self {
        self.map_coeffs(|&a| a * u)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_coeffs(|&a| a * s)
    }

    /// Coefficientwise sum; the degree is the larger of the two.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        Self { coeffs: (0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        Self { coeffs: (0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect() }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|a| a.im_modulus() <= tol)
    }

    /// Largest coefficientwise component difference, comparing up to the
    /// larger degree.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let n = self.degree().max(other.degree());
        (0..=n).map(|k| self.coeff(k).max_abs_diff(other.coeff(k))).fold(0.0, f64::max)
    }

    /// Horner evaluation `a_0 + q (a_1 + q (a_2 + ...))`.
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.coeffs.iter().rev().fold(Quaternion::ZERO, |acc, &a| a + q * acc)
    }

    /// Values on the 2-sphere `x + y S`: returns `(P, Q)` with
    /// `f(x + y I) = P + I Q` for every unit imaginary `I`.
    pub fn axial_parts(&self, x: f64, y: f64) -> (Quaternion, Quaternion) {
        // (x + yI)(P + IQ) = (xP - yQ) + I (yP + xQ)
        self.coeffs
            .iter()
            .rev()
            .fold((Quaternion::ZERO, Quaternion::ZERO), |(p, q), &a| (a + p * x - q * y, p * y + q * x))
    }

    /// `max_{I in S} |f(x + y I)|` together with a maximizing `I`.
    pub fn sphere_max_modulus(&self, x: f64, y: f64) -> (f64, UnitImaginary) {
        let (p, q) = self.axial_parts(x, y);
        // |P + IQ|^2 = |P|^2 + |Q|^2 - 2 <I, Im(Q conj P)>
        let w = (q * p.conj()).im();
        let wn = w.modulus();
        let unit = if wn > 0.0 {
            UnitImaginary::new(-w.x, -w.y, -w.z).unwrap_or_else(|_| UnitImaginary::i())
        } else {
            UnitImaginary::i()
        };
        let sq = p.norm_sqr() + q.norm_sqr() + 2.0 * wn;
        (sq.max(0.0).sqrt(), unit)
    }

    /// `max_{I in S} |Re f(x + y I)| = |Re P| + |Im Q|`.
    pub fn sphere_max_abs_re(&self, x: f64, y: f64) -> f64 {
        let (p, q) = self.axial_parts(x, y);
        p.w.abs() + q.im_modulus()
    }

    /// Coefficients `(n + 1) a_{n+1}`.
    pub fn slice_derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zeros(0);
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(n, &a)| a * n as f64).collect();
        Self { coeffs }
    }

    /// `sum_n r^n |a_n|`.
    pub fn majorant_sum(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| a.modulus() + r * acc)
    }

    /// Lower estimate of `max_{|q| = r} |f(q)|`.
    ///
    /// Draws `samples` uniform points of the 3-sphere of radius `r`, lifts
    /// each to the best point on its 2-sphere `x + y S` (closed form), then
    /// runs a golden-section search in the polar angle around the best one.
    /// Every returned value is attained at an actual point, so the result
    /// never exceeds the true maximum nor [`majorant_sum`](Self::majorant_sum).
    pub fn sup_modulus_on_sphere(&self, r: f64, samples: usize, seed: u64) -> f64 {
        let samples = samples.max(1);
        if r == 0.0 || self.degree() == 0 {
            return self.coeffs[0].modulus().max(self.evaluate(Quaternion::ZERO).modulus());
        }
        let mut rng = seeded(seed);
        let mut best = 0.0f64;
        let mut thetas = Vec::with_capacity(samples + 2);
        for _ in 0..samples {
            let u = Quaternion::random_unit(&mut rng);
            let q = u * r;
            best = best.max(self.evaluate(q).modulus());
            thetas.push(u.im_modulus().atan2(u.w));
        }
        thetas.push(0.0);
        thetas.push(PI);
        thetas.sort_by(f64::total_cmp);

        let lifted = |t: f64| self.sphere_max_modulus(r * t.cos(), r * t.sin()).0;
        let (mut idx, mut top) = (0, f64::NEG_INFINITY);
        for (k, &t) in thetas.iter().enumerate() {
            let v = lifted(t);
            if v > top {
                top = v;
                idx = k;
            }
        }
        let lo = thetas[idx.saturating_sub(1)];
        let hi = thetas[(idx + 1).min(thetas.len() - 1)];
        let t = golden_max(lifted, lo, hi, thetas[idx], 60);
        for t in [t, thetas[idx]] {
            let (x, y) = (r * t.cos(), r * t.sin());
            let (_, unit) = self.sphere_max_modulus(x, y);
            best = best.max(self.evaluate(unit.slice_point(x, y)).modulus());
        }
        best
    }
}

/// Golden-section maximization on `[lo, hi]`; keeps `start` as a candidate
/// so the result is never worse than the starting point.
pub(crate) fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, start: f64, iters: usize) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    if f(mid) >= f(start) {
        mid
    } else {
        start
    }
}

/// Recovers `a_0..=a_{n_max}` of a slice regular `g` from its values on the
/// circle `|z| = r` of `L_I`:
/// `a_n = (1/2pi) int_0^{2pi} r^{-n} e^{-I n t} g(r e^{I t}) dt`,
/// by the uniform trapezoid rule with `nodes` points. The kernel multiplies
/// `g` on the left.
pub fn coefficients_by_contour(
    g: impl Fn(Quaternion) -> Quaternion,
    unit: UnitImaginary,
    r: f64,
    n_max: usize,
    nodes: usize,
) -> Result<Vec<Quaternion>> {
    let required = 4 * (n_max + 1);
    if nodes < required {
        return Err(Error::QuadratureUnderresolved { nodes, required });
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidArgument(format!("contour radius must be positive, got {r}")));
    }
    let step = TAU / nodes as f64;
    let table: Vec<(f64, f64)> = (0..nodes).map(|j| (j as f64 * step).sin_cos()).collect();
    let values: Vec<Quaternion> = table.iter().map(|&(s, c)| g(unit.slice_point(r * c, r * s))).collect();

    let inv_nodes = 1.0 / nodes as f64;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut scale = inv_nodes;
    for n in 0..=n_max {
        let mut acc = Quaternion::ZERO;
        for (j, v) in values.iter().enumerate() {
            let (s, c) = table[(n * j) % nodes];
            // e^{-I n t_j}
            acc += unit.slice_point(c, -s) * *v;
        }
        out.push(acc * scale);
        scale /= r;
    }
    Ok(out)
}
