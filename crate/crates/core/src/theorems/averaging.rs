use crate::error::Result;
use crate::quaternion::{root_of_unity, Quaternion, UnitImaginary};
use crate::series::{coefficients_by_contour, QSeries};

/// `F_I(z) = sum_{k < n} f_I(z w^k)` with `w` the primitive `n`-th root of
/// unity in `L_I`, returned as a series whose coefficients are recovered by
/// contour integration on the unit circle of `L_I`.
///
/// The result is the decimated series `sum_m q^{nm} n a_{nm}`, whatever the
/// slice.
pub fn root_of_unity_average(f: &QSeries, n: usize, unit: UnitImaginary) -> Result<QSeries> {
    let w = root_of_unity(n, unit)?;
    let powers: Vec<Quaternion> = std::iter::successors(Some(Quaternion::ONE), |p| Some(*p * w)).take(n).collect();
    let averaged = |z: Quaternion| powers.iter().map(|&p| f.evaluate(z * p)).sum();
    let degree = f.degree();
    let nodes = (4 * (degree + 1)).next_power_of_two().max(64);
    // a polynomial is entire, so the unit circle is a valid contour and no
    // r^{-n} amplification occurs
    Ok(QSeries::new(coefficients_by_contour(averaged, unit, 1.0, degree, nodes)?))
}

/// The decimated series `n a_{nm}` at degrees `nm`, zero elsewhere.
pub fn decimated(f: &QSeries, n: usize) -> QSeries {
    f.map_coeffs_indexed(|k, &a| if k % n == 0 { a * n as f64 } else { Quaternion::ZERO })
}
