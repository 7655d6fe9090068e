//! Extrapolation of one-sided limits `lim_{ε→0⁺} f(ε)`.

use crate::C64;

/// Neville extrapolation to `h = 0` of the interpolating polynomial through
/// `(h_i, f_i)`.
pub fn extrapolate_to_zero(points: &[(f64, C64)]) -> C64 {
    let n = points.len();
    let h: Vec<f64> = points.iter().map(|p| p.0).collect();
    let mut p: Vec<C64> = points.iter().map(|p| p.1).collect();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (p[i + 1] * h[i] - p[i] * h[i + m]) / (h[i] - h[i + m]);
        }
    }
    p[0]
}

/// Evaluates `f` at `ε ∈ eps` and extrapolates to `ε = 0`.
pub fn eps_limit<F: Fn(f64) -> C64>(f: F, eps: &[f64]) -> C64 {
    let pts: Vec<(f64, C64)> = eps.iter().map(|&e| (e, f(e))).collect();
    extrapolate_to_zero(&pts)
}

/// The ε grid `10⁻⁴, 10⁻⁵, 10⁻⁶`.
pub const EPS_GRID: [f64; 3] = [1e-4, 1e-5, 1e-6];
