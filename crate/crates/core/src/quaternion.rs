//! Quaternion arithmetic and the sphere of imaginary units.
//!
//! Every `q` splits as `x + y I` with `x, y` real, `y >= 0` and `I` a unit
//! imaginary quaternion. The plane `L_I = R + I R` through `I` is a copy of
//! the complex plane, and most of the library works one such slice at a time.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rng::seeded;

/// Element of the skew field of quaternions, `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    #[inline]
    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    #[inline]
    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    #[inline]
    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary part `x i + y j + z k`.
    #[inline]
    pub fn im(self) -> Quaternion {
        Self::new(0.0, self.x, self.y, self.z)
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean modulus `|q|`.
    #[inline]
    pub fn modulus(self) -> f64 {
        // hypot-style scaling is unnecessary at the magnitudes used here
        self.norm_sqr().sqrt()
    }

    /// Modulus of the imaginary part.
    #[inline]
    pub fn im_modulus(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// `q^{-1} = conj(q) / |q|^2`.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj() / n)
    }

    /// Euclidean inner product on `R^4`.
    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// `p^{-1} q p`, the rotation of `q` by a nonzero `p`.
    pub fn conjugated_by(self, p: Quaternion) -> Result<Self> {
        Ok(p.inverse()? * self * p)
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }

    /// Writes `q = x + y I` with `y = |Im q| >= 0`. For real `q` the unit is
    /// `i` by convention.
    pub fn slice_decompose(self) -> (f64, f64, UnitImaginary) {
        let y = self.im_modulus();
        if y == 0.0 {
            return (self.w, 0.0, UnitImaginary::i());
        }
        let unit = UnitImaginary(self.im() / y);
        (self.w, y, unit)
    }

    /// Component-wise Gaussian sample.
    pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        )
    }

    /// Uniform sample of the unit 3-sphere `|q| = 1`.
    pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q = Self::random_gaussian(rng);
            let n = q.modulus();
            if n > 1e-12 {
                return q / n;
            }
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Self::real(w)
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl MulAssign for Quaternion {
    #[inline]
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn div(self, s: f64) -> Self {
        Self::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        <[f64; 4]>::deserialize(d).map(Self::from_array)
    }
}

/// A point of the sphere `S` of imaginary units: `Re I = 0`, `|I| = 1`,
/// hence `I^2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitImaginary(Quaternion);

impl UnitImaginary {
    pub fn i() -> Self {
        Self(Quaternion::I)
    }

    pub fn j() -> Self {
        Self(Quaternion::J)
    }

    pub fn k() -> Self {
        Self(Quaternion::K)
    }

    /// Normalizes the imaginary vector `(x, y, z)`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let q = Quaternion::new(0.0, x, y, z);
        let n = q.modulus();
        if !n.is_finite() || n <= 1e-300 {
            return Err(Error::NotUnitImaginary(format!("zero or non-finite vector ({x}, {y}, {z})")));
        }
        Ok(Self(q / n))
    }

    /// Accepts a quaternion that is a unit imaginary up to `tol`, and
    /// renormalizes it.
    pub fn from_quaternion(q: Quaternion, tol: f64) -> Result<Self> {
        if q.w.abs() > tol || (q.modulus() - 1.0).abs() > tol {
            return Err(Error::NotUnitImaginary(format!("{q}")));
        }
        Self::new(q.x, q.y, q.z)
    }

    #[inline]
    pub fn as_quaternion(self) -> Quaternion {
        self.0
    }

    /// The point `x + y I` of the slice `L_I`.
    #[inline]
    pub fn slice_point(self, x: f64, y: f64) -> Quaternion {
        Quaternion::new(x, y * self.0.x, y * self.0.y, y * self.0.z)
    }

    /// `e^{I theta}` scaled by `r`.
    #[inline]
    pub fn polar(self, r: f64, theta: f64) -> Quaternion {
        let (s, c) = theta.sin_cos();
        self.slice_point(r * c, r * s)
    }

    /// A unit imaginary orthogonal to `self`, from Gram-Schmidt against the
    /// fixed frame `j`, then `k`. Gives `j` for `I = i`.
    pub fn orthogonal(self) -> Self {
        for axis in [Quaternion::J, Quaternion::K, Quaternion::I] {
            if let Some(u) = self.gram_schmidt(axis) {
                return u;
            }
        }
        unreachable!("one of j, k, i is far from parallel to any unit vector")
    }

    /// Seeded variant of [`orthogonal`](Self::orthogonal): Gram-Schmidt on an
    /// isotropic random vector, falling back to the fixed frame when the draw
    /// is nearly parallel to `self`.
    pub fn orthogonal_seeded(self, seed: u64) -> Self {
        let v = random_unit_imaginary(seed).as_quaternion();
        self.gram_schmidt(v).unwrap_or_else(|| self.orthogonal())
    }

    fn gram_schmidt(self, v: Quaternion) -> Option<Self> {
        let r = v - self.0 * self.0.dot(v);
        let n = r.modulus();
        (n > 1e-3).then(|| Self(r.im() / n))
    }

    /// Uniform sample of `S`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v = Quaternion::new(
                0.0,
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            );
            let n = v.modulus();
            if n > 1e-12 {
                return Self(v / n);
            }
        }
    }
}

impl From<UnitImaginary> for Quaternion {
    fn from(u: UnitImaginary) -> Self {
        u.0
    }
}

impl Serialize for UnitImaginary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnitImaginary {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let q = Quaternion::deserialize(d)?;
        Self::from_quaternion(q, 1e-9).map_err(serde::de::Error::custom)
    }
}

/// `J` with `<I, J> = 0`. `None` selects the canonical frame choice.
pub fn orthogonal_unit(unit: UnitImaginary, seed: Option<u64>) -> UnitImaginary {
    match seed {
        Some(s) => unit.orthogonal_seeded(s),
        None => unit.orthogonal(),
    }
}

/// The primitive root `cos(2 pi / n) + I sin(2 pi / n)` in `L_I`.
pub fn root_of_unity(n: usize, unit: UnitImaginary) -> Result<Quaternion> {
    match n {
        0 => Err(Error::ZeroOrder),
        1 => Ok(Quaternion::ONE),
        2 => Ok(Quaternion::real(-1.0)),
        _ => Ok(unit.polar(1.0, std::f64::consts::TAU / n as f64)),
    }
}

pub fn random_unit_imaginary(seed: u64) -> UnitImaginary {
    UnitImaginary::random(&mut seeded(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        a.max_abs_diff(b) <= tol
    }

    #[test]
    fn hamilton_table() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        let m1 = Quaternion::real(-1.0);
        assert_eq!(i * i, m1);
        assert_eq!(j * j, m1);
        assert_eq!(k * k, m1);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(j * k, i);
        assert_eq!(k * j, -i);
        assert_eq!(k * i, j);
        assert_eq!(i * k, -j);
    }

    #[test]
    fn product_examples() {
        let q = Quaternion::new(0.3, -1.2, 2.0, 0.7);
        assert_eq!(q * Quaternion::ONE, q);
        let lhs = Quaternion::new(1.0, 1.0, 0.0, 0.0) * Quaternion::new(1.0, 0.0, 1.0, 0.0);
        assert_eq!(lhs, Quaternion::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn conj_modulus_inverse() {
        assert_eq!(Quaternion::I.conj(), -Quaternion::I);
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).modulus(), 2.0);
        let inv = Quaternion::new(0.0, 2.0, 0.0, 0.0).inverse().unwrap();
        assert!(close(inv, Quaternion::new(0.0, -0.5, 0.0, 0.0), EPS));
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::ZeroInverse));
        assert_eq!(Error::ZeroInverse.to_string(), "zero has no inverse");
    }

    #[test]
    fn decompose_examples() {
        let (x, y, u) = Quaternion::new(3.0, 0.0, 4.0, 0.0).slice_decompose();
        assert_eq!((x, y), (3.0, 4.0));
        assert_eq!(u, UnitImaginary::j());

        let (x, y, u) = Quaternion::real(5.0).slice_decompose();
        assert_eq!((x, y), (5.0, 0.0));
        assert_eq!(u, UnitImaginary::i());

        let (x, y, u) = Quaternion::new(1.0, 1.0, 1.0, 1.0).slice_decompose();
        assert_eq!(x, 1.0);
        assert!((y - 3f64.sqrt()).abs() < EPS);
        let s = 1.0 / 3f64.sqrt();
        assert!(close(u.as_quaternion(), Quaternion::new(0.0, s, s, s), EPS));
    }

    #[test]
    fn orthogonal_frames() {
        assert_eq!(orthogonal_unit(UnitImaginary::i(), None), UnitImaginary::j());

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = UnitImaginary::new(1.0, 1.0, 0.0).unwrap();
        let v = orthogonal_unit(u, None).as_quaternion();
        assert!(u.as_quaternion().dot(v).abs() <= EPS);
        // Gram-Schmidt of j against (i+j)/sqrt2 lands on +-(i-j)/sqrt2
        assert!(close(v, Quaternion::new(0.0, -h, h, 0.0), EPS));

        for seed in 0..200 {
            let u = random_unit_imaginary(seed);
            for s in [None, Some(seed.wrapping_mul(31) + 7)] {
                let v = orthogonal_unit(u, s).as_quaternion();
                assert!(u.as_quaternion().dot(v).abs() <= EPS);
                assert!((v * v + Quaternion::ONE).modulus() <= EPS);
            }
        }
        // degenerate draw falls back to the fixed frame
        let u = random_unit_imaginary(11);
        assert_eq!(u.orthogonal_seeded(11), u.orthogonal());
    }

    #[test]
    fn roots_of_unity() {
        let u = random_unit_imaginary(3);
        assert_eq!(root_of_unity(1, u).unwrap(), Quaternion::ONE);
        assert_eq!(root_of_unity(2, u).unwrap(), Quaternion::real(-1.0));
        assert!(close(root_of_unity(4, UnitImaginary::i()).unwrap(), Quaternion::I, EPS));
        assert_eq!(root_of_unity(0, u), Err(Error::ZeroOrder));
        for n in 1..=12 {
            let w = root_of_unity(n, u).unwrap();
            let mut p = Quaternion::ONE;
            for k in 1..=n {
                p *= w;
                if k < n {
                    assert!(p.max_abs_diff(Quaternion::ONE) > 1e-6, "n={n} k={k}");
                }
            }
            assert!(close(p, Quaternion::ONE, 1e-12), "n={n}");
        }
    }

    #[test]
    fn random_units() {
        for seed in 0..100 {
            let u = random_unit_imaginary(seed).as_quaternion();
            assert!(u.w.abs() <= 1e-15);
            assert!((u.modulus() - 1.0).abs() <= EPS);
        }
        assert_eq!(random_unit_imaginary(42), random_unit_imaginary(42));

        let mut rng = seeded(2024);
        let mut mean = Quaternion::ZERO;
        let n = 10_000;
        for _ in 0..n {
            mean += UnitImaginary::random(&mut rng).as_quaternion();
        }
        assert!((mean / n as f64).modulus() < 0.05);
    }

    #[test]
    fn json_shape() {
        let q = Quaternion::new(1.0, -2.5, 0.0, 3.0);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[1.0,-2.5,0.0,3.0]");
        assert_eq!(serde_json::from_str::<Quaternion>(&s).unwrap(), q);
        assert!(serde_json::from_str::<UnitImaginary>("[0.5,1,0,0]").is_err());
    }
}
