//! Complex Γ, 1/Γ, log Γ, ψ and Pochhammer symbols.
//!
//! Γ uses the Lanczos approximation with `g = 607/128` and fifteen
//! coefficients, evaluated in logarithmic form so that large arguments do
//! not overflow before the final exponential. The left half plane is reached
//! by reflection.

use std::f64::consts::PI;

use crate::{Error, Result, C64};

const LANCZOS_G: f64 = 607.0 / 128.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Returns `Some(n)` when `z` is exactly the nonpositive integer `-n`.
pub fn nonpositive_integer(z: C64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e15 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Distance from `z` to the nearest integer together with that integer.
pub fn nearest_integer(z: C64) -> (i64, f64) {
    let n = z.re.round();
    (n as i64, (z - n).norm())
}

fn small_factorial(z: C64) -> Option<f64> {
    if z.im == 0.0 && z.re >= 1.0 && z.re <= 30.0 && z.re == z.re.round() {
        let n = z.re as u32;
        Some((1..n).fold(1.0, |acc, k| acc * k as f64))
    } else {
        None
    }
}

/// `ln sin(πz)` on some branch, stable for large `|Im z|`.
fn ln_sin_pi(z: C64) -> C64 {
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    let i = C64::i();
    if z.im > 0.0 {
        // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz})
        -i * PI * z + C64::new(0.0, 0.5).ln() + (C64::new(1.0, 0.0) - (i * 2.0 * PI * z).exp()).ln()
    } else {
        // sin(πz) = (-i/2) e^{iπz} (1 - e^{-2iπz})
        i * PI * z + C64::new(0.0, -0.5).ln() + (C64::new(1.0, 0.0) - (-i * 2.0 * PI * z).exp()).ln()
    }
}

fn ln_gamma_right(z: C64) -> C64 {
    let zz = z - 1.0;
    let mut x = C64::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        x += *c / (zz + k as f64);
    }
    let t = zz + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zz + 0.5) * t.ln() - t + x.ln()
}

/// A branch of `ln Γ(z)`; only `exp` of the result is meaningful off the
/// positive real axis.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: C64) -> C64 {
    if z.re < 0.5 {
        C64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(1.0 - z)
    } else {
        ln_gamma_right(z)
    }
}

fn realify(z: C64, v: C64) -> C64 {
    if z.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// Complex gamma function.
pub fn gamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    if let Some(f) = small_factorial(z) {
        return Ok(C64::new(f, 0.0));
    }
    Ok(realify(z, ln_gamma_unchecked(z).exp()))
}

/// Reciprocal gamma function, entire, zero at the poles of Γ.
pub fn rgamma(z: C64) -> C64 {
    if nonpositive_integer(z).is_some() {
        return C64::new(0.0, 0.0);
    }
    if let Some(f) = small_factorial(z) {
        return C64::new(1.0 / f, 0.0);
    }
    realify(z, (-ln_gamma_unchecked(z)).exp())
}

fn cot_pi(z: C64) -> C64 {
    let i = C64::i();
    let w = z * PI;
    if w.im >= 0.0 {
        let e = (2.0 * i * w).exp();
        i * (e + 1.0) / (e - 1.0)
    } else {
        let e = (-2.0 * i * w).exp();
        -i * (e + 1.0) / (e - 1.0)
    }
}

/// Digamma function ψ = Γ′/Γ.
pub fn digamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    if z.re < 0.5 {
        return Ok(realify(z, digamma(1.0 - z)? - PI * cot_pi(z)));
    }
    let z0 = z;
    let mut z = z;
    let mut acc = C64::new(0.0, 0.0);
    while z.re < 10.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let r2 = 1.0 / (z * z);
    // Bernoulli tail B_{2k}/(2k z^{2k}), Horner in 1/z².
    let tail = r2
        * (1.0 / 12.0
            - r2 * (1.0 / 120.0
                - r2 * (1.0 / 252.0 - r2 * (1.0 / 240.0 - r2 * (1.0 / 132.0 - r2 * (691.0 / 32760.0 - r2 / 12.0))))));
    Ok(realify(z0, acc + z.ln() - 0.5 / z - tail))
}

/// Rising factorial `(a)_k = a(a+1)⋯(a+k−1)`.
pub fn pochhammer(a: C64, k: u32) -> C64 {
    (0..k).fold(C64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}
