//! Boundary values `₂F₁(t ± i0)` on the cut `t > 1` and the limits at `z = 1`.
//!
//! The values are obtained by substituting the boundary branches
//! `(1−z)^μ → (t−1)^μ e^{∓iπμ}` and `log(1−z) → ln(t−1) ∓ iπ` (upper sign for
//! `t + i0`) into the expansions about `z = 1` or `z = ∞`. Where those
//! expansions are unavailable or ill-conditioned the differential equation is
//! integrated through the corresponding half plane onto the cut.

use std::f64::consts::PI;

use super::dispatch::{hyp2f1, start_values};
use super::gamma::{gamma, nearest_integer, rgamma};
use super::ode::continue_along;
use super::series::hyp2f1_series;
use super::transform::{connection_one_with, inverse_z_with, log_case};
use super::{CutSide, HypergeomParams};
use crate::{Error, Result, C64};

const NEAR_INTEGER: f64 = 1e-5;
const LOG_RADIUS: f64 = 0.7;

/// `₂F₁(a, b; c; t ± i0)` for real `t > 1`.
pub fn hyp2f1_boundary(p: &HypergeomParams, t: f64, side: CutSide) -> Result<C64> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::DomainError("boundary values need t > 1"));
    }
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    let tz = C64::new(t, 0.0);
    if p.terminating_degree().is_some() {
        return hyp2f1_series(p, tz);
    }
    let sg = side.sign();
    let s = p.excess();
    let (s_n, s_dist) = nearest_integer(s);
    let w = C64::new(1.0 - t, 0.0);
    if s_dist >= NEAR_INTEGER {
        // (1−z)^s with log(1 − z) = ln(t−1) ∓ iπ
        let pow_s = (s * C64::new((t - 1.0).ln(), -sg * PI)).exp();
        return connection_one_with(p, w, pow_s, hyp2f1);
    }
    if s_dist == 0.0 {
        if t - 1.0 <= LOG_RADIUS {
            let log_w = C64::new((t - 1.0).ln(), -sg * PI);
            return log_case(p, s_n, w, log_w);
        }
        if nearest_integer(p.a - p.b).1 >= NEAR_INTEGER {
            // (−z)^{−a} with −z = t e^{∓iπ}
            let log_mz = C64::new(t.ln(), -sg * PI);
            let pw = |e: C64| (-e * log_mz).exp();
            return inverse_z_with(p, C64::new(1.0 / t, 0.0), pw(p.a), pw(p.b), hyp2f1);
        }
    }
    continuation_to_cut(p, t, side)
}

/// Integrate the differential equation from `±i/2` to `t ± i/2` and down to `t`.
fn continuation_to_cut(p: &HypergeomParams, t: f64, side: CutSide) -> Result<C64> {
    let sg = side.sign();
    let path = [C64::new(0.0, 0.5 * sg), C64::new(t, 0.5 * sg), C64::new(t, 0.0)];
    let (f0, df0) = start_values(p, path[0])?;
    Ok(continue_along(p, &path, f0, df0)?.0)
}

/// `₂F₁(a, b; c; 1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))` for `Re(c−a−b) > 0`.
pub fn gauss_limit_value(p: &HypergeomParams) -> Result<C64> {
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    let s = p.excess();
    if s.re <= 0.0 {
        return Err(Error::ParameterDomain("Gauss limit needs Re(c - a - b) > 0"));
    }
    Ok(gamma(p.c)? * gamma(s)? * rgamma(p.c - p.a) * rgamma(p.c - p.b))
}

/// `lim_{z→1⁻} ₂F₁(a, b; a+b; z)/(−log(1−z)) = Γ(a+b)/(Γ(a)Γ(b))`.
pub fn log_limit_coeff(p: &HypergeomParams) -> Result<C64> {
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    if (p.c - p.a - p.b).norm() > 1e-12 * (1.0 + p.c.norm()) {
        return Err(Error::ParameterDomain("log limit needs c = a + b"));
    }
    Ok(gamma(p.c)? * rgamma(p.a) * rgamma(p.b))
}
