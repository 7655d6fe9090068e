//! Associated Legendre functions of the first and second kind.

use std::f64::consts::PI;

use super::dispatch::hyp2f1;
use super::gamma::{gamma, nonpositive_integer, rgamma};
use super::{cpow, HypergeomParams};
use crate::{Error, Result, C64};

fn in_segment(z: C64, lo: f64, hi: f64) -> bool {
    z.im == 0.0 && z.re >= lo && z.re <= hi
}

/// `Q^μ_ν(z) = e^{iπμ} 2^{−ν−1} √π Γ(ν+μ+1)/Γ(ν+3/2) z^{−ν−μ−1} (z²−1)^{μ/2}
/// ₂F₁((ν+μ)/2 + 1, (ν+μ+1)/2; ν+3/2; 1/z²)` for `z ∉ [−1, 1]`.
pub fn legendre_q(mu: C64, nu: C64, z: C64) -> Result<C64> {
    if in_segment(z, -1.0, 1.0) {
        return Err(Error::OnCut);
    }
    if nonpositive_integer(nu + 1.5).is_some() {
        return Err(Error::ParameterPole("nu + 3/2 is a nonpositive integer"));
    }
    let g = gamma(nu + mu + 1.0).map_err(|_| Error::ParameterPole("nu + mu + 1 is a pole"))?;
    let i = C64::i();
    let pref = (i * PI * mu).exp() * cpow(C64::new(2.0, 0.0), -nu - 1.0) * PI.sqrt() * g * rgamma(nu + 1.5);
    let p = HypergeomParams::new((nu + mu) / 2.0 + 1.0, (nu + mu + 1.0) / 2.0, nu + 1.5);
    let f = hyp2f1(&p, 1.0 / (z * z))?;
    Ok(pref * cpow(z, -nu - mu - 1.0) * cpow(z * z - 1.0, mu / 2.0) * f)
}

/// `P^μ_ν(z) = 2^μ / (Γ(1−μ)(z²−1)^{μ/2}) ₂F₁(1−μ+ν, −μ−ν; 1−μ; (1−z)/2)` for
/// `z ∉ (−∞, 1]`.
pub fn legendre_p(mu: C64, nu: C64, z: C64) -> Result<C64> {
    if mu.im == 0.0 && mu.re >= 1.0 && mu.re == mu.re.round() {
        return Err(Error::ParameterPole("mu is a positive integer"));
    }
    if z.im == 0.0 && z.re <= 1.0 {
        return Err(Error::OnCut);
    }
    let p = HypergeomParams::new(1.0 - mu + nu, -mu - nu, 1.0 - mu);
    let f = hyp2f1(&p, (1.0 - z) / 2.0)?;
    Ok(cpow(C64::new(2.0, 0.0), mu) * rgamma(1.0 - mu) / cpow(z * z - 1.0, mu / 2.0) * f)
}
