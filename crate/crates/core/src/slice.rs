//! Per-slice holomorphic data. On a slice `L_I`, a regular `f` splits as
//! `f_I(z) = F(z) + G(z) J` with `F, G` holomorphic `L_I`-valued and `J` a
//! unit orthogonal to `I`; conversely a holomorphic `f_I` on one slice
//! determines `f` everywhere through the extension formula.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, UnitImaginary};
use crate::series::QSeries;

const ORTHO_TOL: f64 = 1e-10;

/// Power series with coefficients in `L_I`, stored as complex numbers whose
/// imaginary unit stands for `I`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceSeries(pub Vec<Complex64>);

impl SliceSeries {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.0.get(n).copied().unwrap_or_default()
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| a + z * acc)
    }

    /// Coefficientwise conjugate, i.e. the series of `conj(F(conj z))`.
    pub fn conj_reflect(&self) -> Self {
        Self(self.0.iter().map(|c| c.conj()).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn convolve(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Self(Vec::new());
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

/// `f_I = F + G J` on the slice `L_I`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitPair {
    pub f: SliceSeries,
    pub g: SliceSeries,
    pub unit: UnitImaginary,
    pub ortho: UnitImaginary,
}

fn check_orthogonal(unit: UnitImaginary, ortho: UnitImaginary) -> Result<()> {
    let ip = unit.as_quaternion().dot(ortho.as_quaternion());
    if ip.abs() > ORTHO_TOL {
        return Err(Error::NotOrthogonal(ip));
    }
    Ok(())
}

/// Splits every coefficient as `a_n = alpha_n + beta_n J` with
/// `alpha_n, beta_n` in `L_I`, by projection on the orthonormal basis
/// `1, I, J, IJ`.
pub fn split(f: &QSeries, unit: UnitImaginary, ortho: UnitImaginary) -> Result<SplitPair> {
    check_orthogonal(unit, ortho)?;
    let (i, j) = (unit.as_quaternion(), ortho.as_quaternion());
    let ij = i * j;
    let (fs, gs) =
        f.coeffs().iter().map(|a| (Complex64::new(a.w, a.dot(i)), Complex64::new(a.dot(j), a.dot(ij)))).unzip();
    Ok(SplitPair { f: SliceSeries(fs), g: SliceSeries(gs), unit, ortho })
}

impl SplitPair {
    fn lift(&self, c: Complex64) -> Quaternion {
        self.unit.slice_point(c.re, c.im)
    }

    /// `F(z) + G(z) J` for `z = re + im I`.
    pub fn evaluate(&self, z: Complex64) -> Quaternion {
        self.lift(self.f.evaluate(z)) + self.lift(self.g.evaluate(z)) * self.ortho.as_quaternion()
    }

    /// Evaluates at a point of `L_I` given as a quaternion.
    pub fn evaluate_on_slice(&self, q: Quaternion) -> Quaternion {
        self.evaluate(Complex64::new(q.w, q.dot(self.unit.as_quaternion())))
    }

    /// The quaternionic series with coefficients `alpha_n + beta_n J`.
    pub fn recombine(&self) -> QSeries {
        let j = self.ortho.as_quaternion();
        let n = self.f.0.len().max(self.g.0.len());
        QSeries::new((0..n).map(|k| self.lift(self.f.coeff(k)) + self.lift(self.g.coeff(k)) * j).collect())
    }

    /// `f_I^c(z) = conj(F(conj z)) - G(z) J`.
    pub fn regular_conjugate(&self) -> Self {
        Self { f: self.f.conj_reflect(), g: self.g.neg(), ..self.clone() }
    }

    fn same_frame(&self, other: &Self) -> bool {
        let close = |a: UnitImaginary, b: UnitImaginary| a.as_quaternion().max_abs_diff(b.as_quaternion()) <= 1e-12;
        close(self.unit, other.unit) && close(self.ortho, other.ortho)
    }
}

/// `f_I * g_I = [F H - G conj(K(conj z))] + [F K + G conj(H(conj z))] J`.
pub fn split_star(p: &SplitPair, q: &SplitPair) -> Result<SplitPair> {
    if !p.same_frame(q) {
        return Err(Error::SliceMismatch);
    }
    let f = p.f.convolve(&q.f).sub(&p.g.convolve(&q.g.conj_reflect()));
    let g = p.f.convolve(&q.g).add(&p.g.convolve(&q.f.conj_reflect()));
    Ok(SplitPair { f, g, unit: p.unit, ortho: p.ortho })
}

/// Extends a holomorphic `f_I: L_I -> H` to the point `q = x + y J`:
///
/// `f(x+yJ) = 1/2 [f_I(x+yI) + f_I(x-yI)] + J I/2 [f_I(x-yI) - f_I(x+yI)]`.
pub fn extend(f_slice: impl Fn(Quaternion) -> Quaternion, unit: UnitImaginary, q: Quaternion) -> Quaternion {
    let (x, y, j) = q.slice_decompose();
    let plus = f_slice(unit.slice_point(x, y));
    let minus = f_slice(unit.slice_point(x, -y));
    (plus + minus) * 0.5 + j.as_quaternion() * unit.as_quaternion() * ((minus - plus) * 0.5)
}

/// [`extend`] applied to the restriction of `f` to `L_I`.
pub fn extend_from_slice(f: &QSeries, unit: UnitImaginary, q: Quaternion) -> Quaternion {
    extend(|z| f.evaluate(z), unit, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{orthogonal_unit, random_unit_imaginary};
    use crate::rng::seeded;
    use crate::star::{regular_conjugate, star_product};

    fn random_series(seed: u64, degree: usize) -> QSeries {
        let mut rng = seeded(seed);
        QSeries::new((0..=degree).map(|_| Quaternion::random_gaussian(&mut rng)).collect())
    }

    fn frame(seed: u64) -> (UnitImaginary, UnitImaginary) {
        let i = random_unit_imaginary(seed);
        (i, orthogonal_unit(i, Some(seed + 1)))
    }

    #[test]
    fn split_examples() {
        let (i, j) = frame(1);
        let real = QSeries::from_real(&[1.0, -0.5, 2.0]);
        let p = split(&real, i, j).unwrap();
        assert!(p.g.0.iter().all(|c| c.norm() == 0.0));

        let p = split(&QSeries::constant(j.as_quaternion()), i, j).unwrap();
        assert!(p.f.0[0].norm() < 1e-15);
        assert!((p.g.0[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        assert!(matches!(split(&real, i, i), Err(Error::NotOrthogonal(_))));
    }

    #[test]
    fn split_recombines() {
        let f = random_series(2, 8);
        let (i, j) = frame(3);
        let p = split(&f, i, j).unwrap();
        assert!(p.recombine().max_coeff_diff(&f) < 1e-14);
        for k in 0..50 {
            let z = Complex64::from_polar(0.8 * (k as f64 / 50.0), 0.7 * k as f64);
            let direct = f.evaluate(i.slice_point(z.re, z.im));
            assert!(p.evaluate(z).max_abs_diff(direct) < 1e-11);
        }
    }

    #[test]
    fn split_star_matches_convolution() {
        for s in 0..10 {
            let (f, g) = (random_series(10 + s, 6), random_series(20 + s, 5));
            let (i, j) = frame(30 + s);
            let prod = split_star(&split(&f, i, j).unwrap(), &split(&g, i, j).unwrap()).unwrap();
            assert!(prod.recombine().max_coeff_diff(&star_product(&f, &g)) < 1e-10);
        }
        // real operands
        let (f, g) = (QSeries::from_real(&[1.0, 2.0]), QSeries::from_real(&[0.5, -1.0, 3.0]));
        let (i, j) = frame(4);
        let prod = split_star(&split(&f, i, j).unwrap(), &split(&g, i, j).unwrap()).unwrap();
        assert!(prod.recombine().max_coeff_diff(&star_product(&f, &g)) < 1e-14);
        // unit pair
        let p = split(&random_series(5, 4), i, j).unwrap();
        let one = split(&QSeries::one(), i, j).unwrap();
        assert!(split_star(&p, &one).unwrap().recombine().max_coeff_diff(&p.recombine()) < 1e-15);

        let (i2, j2) = frame(77);
        let other = split(&QSeries::one(), i2, j2).unwrap();
        assert_eq!(split_star(&p, &other), Err(Error::SliceMismatch));
    }

    #[test]
    fn split_conjugate_matches_coefficientwise() {
        let f = random_series(40, 7);
        let fc = regular_conjugate(&f);
        let (i, j) = frame(41);
        let via_split = split(&f, i, j).unwrap().regular_conjugate();
        for k in 0..50 {
            let q = Quaternion::random_unit(&mut seeded(500 + k)) * 0.7;
            let value = extend(|z| via_split.evaluate_on_slice(z), i, q);
            assert!(value.max_abs_diff(fc.evaluate(q)) < 1e-10);
        }
    }

    #[test]
    fn extension_examples() {
        let f = random_series(50, 6);
        let (i, _) = frame(51);
        let x = Quaternion::real(0.35);
        assert_eq!(extend_from_slice(&f, i, x), f.evaluate(x));
        let on_slice = i.slice_point(0.2, 0.5);
        assert!(extend_from_slice(&f, i, on_slice).max_abs_diff(f.evaluate(on_slice)) < 1e-14);

        for s in 0..20 {
            let j = random_unit_imaginary(60 + s);
            let q = j.slice_point(0.2, 0.5);
            let want = f.evaluate(q);
            assert!(extend_from_slice(&f, i, q).max_abs_diff(want) < 1e-10);
            let (i2, _) = frame(90 + s);
            assert!(extend_from_slice(&f, i2, q).max_abs_diff(want) < 1e-10);
        }
    }
}
