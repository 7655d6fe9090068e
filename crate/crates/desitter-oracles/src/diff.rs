//! Central finite differences.

use crate::C64;

/// Fourth order central first derivative.
pub fn derivative<F: Fn(f64) -> C64>(f: F, x: f64, h: f64) -> C64 {
    (f(x - 2.0 * h) - f(x + 2.0 * h) + 8.0 * (f(x + h) - f(x - h))) / (12.0 * h)
}

/// Fourth order central second derivative.
pub fn second_derivative<F: Fn(f64) -> C64>(f: F, x: f64, h: f64) -> C64 {
    (-f(x - 2.0 * h) - f(x + 2.0 * h) + 16.0 * (f(x + h) + f(x - h)) - 30.0 * f(x)) / (12.0 * h * h)
}
