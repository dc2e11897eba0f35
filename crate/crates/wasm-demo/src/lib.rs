//! Browser bindings: the majorant curve of the extremal family, the Bohr
//! radius of a corpus function, and modulus heatmaps on a slice.

use serde_json::json;
use wasm_bindgen::prelude::*;

use slicereg::theorems::witness::phi_majorant;
use slicereg::theorems::{bohr_radius_estimate, corpus_function, AdmissibleFunction, Generator, BOHR_RADIUS};
use slicereg::{QSeries, Quaternion, UnitImaginary};

fn generator(name: &str) -> Option<Generator> {
    match name {
        "g1" => Some(Generator::G1),
        "g2" => Some(Generator::G2),
        _ => None,
    }
}

/// `c (1 + r (1 - a)/(1 - r a))` at `points` radii evenly spaced on `[0, 1]`.
#[wasm_bindgen]
pub fn witness_majorant_curve(a: f64, c: f64, points: usize) -> Vec<f64> {
    let n = points.max(2);
    (0..n).map(|k| c * phi_majorant(a, k as f64 / (n - 1) as f64)).collect()
}

/// JSON summary of `phi_c` for the sliders: sup on the ball, majorant at
/// 1/3 and the radius where the majorant reaches 1.
#[wasm_bindgen]
pub fn witness_summary(a: f64, c: f64) -> String {
    if !(a > 0.0 && a < 1.0 && c > 0.0) {
        return json!({ "error": "need 0 < a < 1 and c > 0" }).to_string();
    }
    let f = AdmissibleFunction::phi(a, c);
    json!({
        "sup_bound": 2.0 * c / (1.0 + a),
        "majorant_at_third": c * phi_majorant(a, BOHR_RADIUS),
        "bohr_radius": bohr_radius_estimate(&f, 1e-10),
        "degree": f.series.degree(),
    })
    .to_string()
}

/// Coefficients of corpus function `index` as a flat `[w, x, y, z, ...]`
/// array. `generator` is `"g1"`, `"g2"` or anything else to alternate.
#[wasm_bindgen]
pub fn corpus_coefficients(seed: u64, index: u64, generator_name: &str) -> Vec<f64> {
    corpus_function(seed, index, generator(generator_name)).series.coeffs().iter().flat_map(|q| q.to_array()).collect()
}

/// Bohr radius of corpus function `index`.
#[wasm_bindgen]
pub fn corpus_bohr_radius(seed: u64, index: u64, generator_name: &str) -> f64 {
    bohr_radius_estimate(&corpus_function(seed, index, generator(generator_name)), 1e-10)
}

fn series_from_flat(coeffs: &[f64]) -> Option<QSeries> {
    if coeffs.is_empty() || !coeffs.len().is_multiple_of(4) {
        return None;
    }
    Some(QSeries::new(coeffs.chunks_exact(4).map(|c| Quaternion::new(c[0], c[1], c[2], c[3])).collect()))
}

/// `|f(x + y I)|` on a `size x size` grid over `[-1, 1]^2` of the slice of
/// `I = (ix, iy, iz)`, row-major with `y` decreasing. Points outside the
/// unit disk are NaN. Returns an empty array on malformed input.
#[wasm_bindgen]
pub fn slice_modulus_grid(coeffs: &[f64], ix: f64, iy: f64, iz: f64, size: usize) -> Vec<f64> {
    let (Some(f), Ok(unit)) = (series_from_flat(coeffs), UnitImaginary::new(ix, iy, iz)) else {
        return Vec::new();
    };
    let n = size.max(2);
    let step = 2.0 / (n - 1) as f64;
    let mut out = Vec::with_capacity(n * n);
    for row in 0..n {
        let y = 1.0 - row as f64 * step;
        for col in 0..n {
            let x = -1.0 + col as f64 * step;
            out.push(if x * x + y * y <= 1.0 { f.evaluate(unit.slice_point(x, y)).modulus() } else { f64::NAN });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_endpoints() {
        let v = witness_majorant_curve(0.5, 0.72, 101);
        assert_eq!(v.len(), 101);
        assert_eq!(v[0], 0.72);
        assert!((v[100] - 0.72 * 2.0).abs() < 1e-15);
        assert!(v.windows(2).all(|p| p[1] > p[0]));
        assert!((v[60] - 0.72 * 10.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn summary_values() {
        let s: serde_json::Value = serde_json::from_str(&witness_summary(0.5, 0.72)).unwrap();
        assert!((s["sup_bound"].as_f64().unwrap() - 0.96).abs() < 1e-15);
        assert!((s["bohr_radius"].as_f64().unwrap() - 0.56).abs() < 1e-9);
        let bad: serde_json::Value = serde_json::from_str(&witness_summary(1.0, 0.5)).unwrap();
        assert!(bad["error"].is_string());
    }

    #[test]
    fn corpus_round_trip() {
        let flat = corpus_coefficients(3, 1, "alt");
        let f = series_from_flat(&flat).unwrap();
        assert_eq!(f, corpus_function(3, 1, None).series);
        assert!(corpus_bohr_radius(3, 1, "alt") >= BOHR_RADIUS);
    }

    #[test]
    fn grid_layout() {
        // f(q) = q: modulus is the distance to the origin
        let g = slice_modulus_grid(&[0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 1.0, 1.0, 5);
        assert_eq!(g.len(), 25);
        assert!(g[0].is_nan());
        assert_eq!(g[12], 0.0);
        assert!((g[2] - 1.0).abs() < 1e-15);
        assert!((g[13] - 0.5).abs() < 1e-15);
        assert!(slice_modulus_grid(&[1.0, 2.0], 1.0, 0.0, 0.0, 4).is_empty());
        assert!(slice_modulus_grid(&[1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0, 4).is_empty());
    }
}
