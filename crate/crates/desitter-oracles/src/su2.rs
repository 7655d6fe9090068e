//! Matrix valued spherical functions of `SL₂(ℂ)` by direct quadrature over
//! `K = SU(2)`.
//!
//! The principal series with parameters `(μ, λ)` is realised on functions on
//! `SU(2)` transforming under the diagonal torus with weight `μ`. For the
//! K-type `π_ℓ` the weight-`i` line of `π_ℓ` is spanned by the matrix
//! coefficient `f_i(k)`, the conjugated coefficient of `e₁^{ℓ−i} e₂^i` in
//! `(k₁₁e₁ + k₂₁e₂)^{ℓ−w} (k₁₂e₁ + k₂₂e₂)^w` with `w = (ℓ−μ)/2`. Acting by
//! `a_t⁻¹ = diag(e^{−t/2}, e^{t/2})` and decomposing `a_t⁻¹ k = κ·(upper
//! triangular)` gives the cocycle `‖a_t⁻¹ k e₁‖^{−λ−2}`, whose H-average
//! against `f_i` is the diagonal entry `φ^{ℓ,i}(t)`.
//!
//! `k = [[α, −β̄], [β, ᾱ]]` with `α = cos η e^{iξ₁}`, `β = sin η e^{iξ₂}`; Haar
//! measure `sin η cos η dη dξ₁ dξ₂`; Gauss–Legendre in `η`, trapezoid in `ξ`.

use crate::quadrature::gauss_legendre;
use crate::C64;

/// Coefficients (in powers of `e₂`) of
/// `(k₁₁e₁ + k₂₁e₂)^{ℓ−w} (k₁₂e₁ + k₂₂e₂)^w`.
fn weight_coefficients(k: [C64; 4], ell: usize, w: usize) -> Vec<C64> {
    let [k11, k21, k12, k22] = k;
    let mut c = vec![C64::new(0.0, 0.0); ell + 1];
    c[0] = C64::new(1.0, 0.0);
    let mut deg = 0;
    let mul = |a: C64, b: C64, c: &mut Vec<C64>, deg: &mut usize| {
        for j in (0..=*deg + 1).rev() {
            let lower = if j > 0 { c[j - 1] * b } else { C64::new(0.0, 0.0) };
            let upper = if j <= *deg { c[j] * a } else { C64::new(0.0, 0.0) };
            c[j] = upper + lower;
        }
        *deg += 1;
    };
    for _ in 0..(ell - w) {
        mul(k11, k21, &mut c, &mut deg);
    }
    for _ in 0..w {
        mul(k12, k22, &mut c, &mut deg);
    }
    c
}

/// Diagonal entries `φ^{ℓ,i}_{μ,λ}(t)`, `i = 0..=ℓ`, using an `n`-point rule
/// in each of the three Euler angles.
pub fn matrix_spherical_oracle(ell: usize, mu: i64, lambda: C64, t: f64, n: usize) -> Vec<C64> {
    assert!(mu.unsigned_abs() as usize <= ell && (ell as i64 - mu) % 2 == 0);
    let w = ((ell as i64 - mu) / 2) as usize;
    let (gx, gw) = gauss_legendre(n);
    let quarter = std::f64::consts::FRAC_PI_4;
    let xi: Vec<C64> = (0..n)
        .map(|j| C64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64))
        .collect();
    let (em, ep) = ((-t / 2.0).exp(), (t / 2.0).exp());
    let mut num = vec![C64::new(0.0, 0.0); ell + 1];
    let mut den = vec![0.0; ell + 1];
    for (x, wx) in gx.iter().zip(&gw) {
        let eta = (x + 1.0) * quarter;
        let weight = wx * quarter * eta.sin() * eta.cos();
        for p1 in &xi {
            for p2 in &xi {
                let alpha = p1 * eta.cos();
                let beta = p2 * eta.sin();
                let k = [alpha, beta, -beta.conj(), alpha.conj()];
                let fk = weight_coefficients(k, ell, w);
                let g11 = alpha * em;
                let g21 = beta * ep;
                let nr = (g11.norm_sqr() + g21.norm_sqr()).sqrt();
                let (u1, u2) = (g11 / nr, g21 / nr);
                let fkap = weight_coefficients([u1, u2, -u2.conj(), u1.conj()], ell, w);
                let cocycle = (-(lambda + 2.0) * nr.ln()).exp() * weight;
                for i in 0..=ell {
                    // f_i = conj(coefficient); f_i(κ) · conj(f_i(k))
                    num[i] += cocycle * fkap[i].conj() * fk[i];
                    den[i] += weight * fk[i].norm_sqr();
                }
            }
        }
    }
    num.iter().zip(&den).map(|(a, b)| a / b).collect()
}
