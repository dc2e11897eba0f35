//! The regular product and the operations built on it: regular conjugate,
//! symmetrization, regular reciprocal, the twist map `T_f` and pointwise
//! formulas for `*`-products and `*`-quotients.
//!
//! On a ball centered at the origin the regular product is the convolution
//! of right coefficients, `(f * g)_n = sum_{k <= n} a_k b_{n-k}`, with the
//! factor order preserved.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::series::QSeries;

/// Relative threshold below which a value of `f^s` counts as a zero.
pub const ZERO_SET_TOL: f64 = 1e-9;

/// `f * g`, of exact degree `deg f + deg g`.
pub fn star_product(f: &QSeries, g: &QSeries) -> QSeries {
    star_product_capped(f, g, f.degree() + g.degree())
}

/// `f * g` truncated at degree `cap`.
pub fn star_product_capped(f: &QSeries, g: &QSeries, cap: usize) -> QSeries {
    let (a, b) = (f.coeffs(), g.coeffs());
    let coeffs = (0..=cap)
        .map(|n| {
            let lo = n.saturating_sub(b.len() - 1);
            let hi = n.min(a.len() - 1);
            if lo > hi {
                return Quaternion::ZERO;
            }
            (lo..=hi).map(|k| a[k] * b[n - k]).sum()
        })
        .collect();
    QSeries::new(coeffs)
}

/// `f * g (q) = f(q) g(f(q)^{-1} q f(q))`, or `0` where `f(q) = 0`.
pub fn pointwise_star(f: &QSeries, g: &QSeries, q: Quaternion) -> Quaternion {
    let fq = f.evaluate(q);
    match q.conjugated_by(fq) {
        Ok(moved) => fq * g.evaluate(moved),
        Err(_) => Quaternion::ZERO,
    }
}

/// `f^c`: conjugates every coefficient.
pub fn regular_conjugate(f: &QSeries) -> QSeries {
    f.map_coeffs(|a| a.conj())
}

/// `f^s = f * f^c`. Its coefficients are real up to rounding.
pub fn symmetrization(f: &QSeries) -> QSeries {
    star_product(f, &regular_conjugate(f))
}

/// Formal inverse of a series with real coefficients, to degree `n`.
fn real_series_inverse(s: &[f64], n: usize) -> Vec<f64> {
    let mut inv = vec![0.0; n + 1];
    inv[0] = 1.0 / s[0];
    for k in 1..=n {
        let acc: f64 = (1..=k.min(s.len() - 1)).map(|j| s[j] * inv[k - j]).sum();
        inv[k] = -acc * inv[0];
    }
    inv
}

/// `f^{-*} = (f^s)^{-1} f^c` as a power series truncated at degree `n`.
///
/// Requires `a_0 != 0`, so that `f^s(0) = |a_0|^2` is invertible.
pub fn regular_reciprocal(f: &QSeries, n: usize) -> Result<QSeries> {
    if f.coeff(0).norm_sqr() == 0.0 {
        return Err(Error::ReciprocalUndefined);
    }
    let conj = regular_conjugate(f).truncated(n);
    let sym: Vec<f64> = symmetrization(&conj).coeffs().iter().map(|c| c.w).collect();
    let inv = QSeries::from_real(&real_series_inverse(&sym, n));
    Ok(star_product_capped(&inv, &conj, n))
}

fn zero_set_threshold(f: &QSeries, q: Quaternion, tol: f64) -> f64 {
    tol * (1.0 + f.majorant_sum(q.modulus()))
}

/// `T_f(q) = f^c(q)^{-1} q f^c(q)`.
pub fn twist_map(f: &QSeries, q: Quaternion) -> Result<Quaternion> {
    let fc = regular_conjugate(f);
    let v = fc.evaluate(q);
    if v.modulus() <= zero_set_threshold(&fc, q, 1e-14) {
        return Err(Error::TwistUndefined);
    }
    q.conjugated_by(v)
}

/// `f^{-*} * g (q) = f(T_f(q))^{-1} g(T_f(q))`, away from the zeros of `f^s`.
pub fn quotient_eval(f: &QSeries, g: &QSeries, q: Quaternion) -> Result<Quaternion> {
    let sym = symmetrization(f);
    if sym.evaluate(q).modulus() <= zero_set_threshold(&sym, q, ZERO_SET_TOL) {
        return Err(Error::NearZeroSet);
    }
    let t = twist_map(f, q)?;
    Ok(f.evaluate(t).inverse()? * g.evaluate(t))
}
