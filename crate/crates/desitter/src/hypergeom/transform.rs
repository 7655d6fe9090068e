//! Linear transformations and connection formulas of `₂F₁`.
//!
//! Each formula is written once against an `inner` evaluator. The dispatcher
//! passes the raw series (the transformed argument is small there), while the
//! public wrappers pass the full evaluator so that the formulas can be tested
//! as identities anywhere on the slit plane.

use super::dispatch::hyp2f1;
use super::gamma::{digamma, gamma, nonpositive_integer, rgamma};
use super::series::hyp2f1_series;
use super::{clog, cpow, HypergeomParams};
use crate::{Error, Result, C64};

pub(crate) type Inner = fn(&HypergeomParams, C64) -> Result<C64>;

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

fn hp(a: C64, b: C64, c: C64) -> HypergeomParams {
    HypergeomParams::new(a, b, c)
}

pub(crate) fn pfaff_with(p: &HypergeomParams, z: C64, inner: Inner) -> Result<C64> {
    let w = z / (z - 1.0);
    Ok(cpow(one() - z, -p.a) * inner(&hp(p.a, p.c - p.b, p.c), w)?)
}

/// `(1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))`.
pub fn pfaff_transform(p: &HypergeomParams, z: C64) -> Result<C64> {
    pfaff_with(p, z, hyp2f1)
}

/// `(1−z)^{c−a−b} ₂F₁(c−a, c−b; c; z)`.
pub fn euler_transform(p: &HypergeomParams, z: C64) -> Result<C64> {
    Ok(cpow(one() - z, p.excess()) * hyp2f1(&hp(p.c - p.a, p.c - p.b, p.c), z)?)
}

fn gamma_or_pole(z: C64, what: &'static str) -> Result<C64> {
    gamma(z).map_err(|_| Error::ParameterPole(what))
}

/// Coefficients `Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))` and `Γ(c)Γ(a+b−c)/(Γ(a)Γ(b))`.
fn connection_coefficients(p: &HypergeomParams) -> Result<(C64, C64)> {
    let s = p.excess();
    let gc = gamma_or_pole(p.c, "c is a nonpositive integer")?;
    let a1 = gc * gamma_or_pole(s, "c - a - b is an integer")? * rgamma(p.c - p.a) * rgamma(p.c - p.b);
    let a2 = gc * gamma_or_pole(-s, "c - a - b is an integer")? * rgamma(p.a) * rgamma(p.b);
    Ok((a1, a2))
}

/// Connection formula at `z = 1` written in `w = 1 − z`, with the branch of
/// `(1−z)^{c−a−b}` supplied by the caller.
pub(crate) fn connection_one_with(p: &HypergeomParams, w: C64, pow_s: C64, inner: Inner) -> Result<C64> {
    let s = p.excess();
    let (a1, a2) = connection_coefficients(p)?;
    let f1 = inner(&hp(p.a, p.b, 1.0 - s), w)?;
    let f2 = inner(&hp(p.c - p.a, p.c - p.b, 1.0 + s), w)?;
    Ok(a1 * f1 + a2 * pow_s * f2)
}

/// Expansion about `z = 1` for non-integer `c − a − b`.
pub fn connection_one(p: &HypergeomParams, z: C64) -> Result<C64> {
    let w = one() - z;
    connection_one_with(p, w, cpow(w, p.excess()), hyp2f1)
}

fn inverse_coefficients(p: &HypergeomParams) -> Result<(C64, C64)> {
    let gc = gamma_or_pole(p.c, "c is a nonpositive integer")?;
    let d = p.b - p.a;
    let b1 = gc * gamma_or_pole(d, "a - b is an integer")? * rgamma(p.b) * rgamma(p.c - p.a);
    let b2 = gc * gamma_or_pole(-d, "a - b is an integer")? * rgamma(p.a) * rgamma(p.c - p.b);
    Ok((b1, b2))
}

/// Expansion about `z = ∞` with the branches of `(−z)^{−a}`, `(−z)^{−b}`
/// supplied by the caller.
pub(crate) fn inverse_z_with(p: &HypergeomParams, inv_z: C64, pow_a: C64, pow_b: C64, inner: Inner) -> Result<C64> {
    let (b1, b2) = inverse_coefficients(p)?;
    let f1 = inner(&hp(p.a, p.a - p.c + 1.0, p.a - p.b + 1.0), inv_z)?;
    let f2 = inner(&hp(p.b, p.b - p.c + 1.0, p.b - p.a + 1.0), inv_z)?;
    Ok(b1 * pow_a * f1 + b2 * pow_b * f2)
}

/// Expansion in `1/z` for non-integer `a − b`.
pub fn inverse_z(p: &HypergeomParams, z: C64) -> Result<C64> {
    let mz = -z;
    inverse_z_with(p, 1.0 / z, cpow(mz, -p.a), cpow(mz, -p.b), hyp2f1)
}

pub(crate) fn inverse_one_minus_with(p: &HypergeomParams, z: C64, inner: Inner) -> Result<C64> {
    let (b1, b2) = inverse_coefficients(p)?;
    let w1 = one() - z;
    let w = 1.0 / w1;
    let f1 = inner(&hp(p.a, p.c - p.b, p.a - p.b + 1.0), w)?;
    let f2 = inner(&hp(p.b, p.c - p.a, p.b - p.a + 1.0), w)?;
    Ok(b1 * cpow(w1, -p.a) * f1 + b2 * cpow(w1, -p.b) * f2)
}

/// Expansion in `1/(1−z)` for non-integer `a − b`.
pub fn inverse_one_minus_z(p: &HypergeomParams, z: C64) -> Result<C64> {
    inverse_one_minus_with(p, z, hyp2f1)
}

pub(crate) fn one_minus_inverse_with(p: &HypergeomParams, z: C64, inner: Inner) -> Result<C64> {
    let s = p.excess();
    let (a1, a2) = connection_coefficients(p)?;
    let w = one() - 1.0 / z;
    let f1 = inner(&hp(p.a, p.a - p.c + 1.0, 1.0 - s), w)?;
    let f2 = inner(&hp(p.c - p.a, 1.0 - p.a, 1.0 + s), w)?;
    Ok(a1 * cpow(z, -p.a) * f1 + a2 * cpow(one() - z, s) * cpow(z, p.a - p.c) * f2)
}

/// Expansion in `1 − 1/z` for non-integer `c − a − b`.
pub fn one_minus_inverse_z(p: &HypergeomParams, z: C64) -> Result<C64> {
    one_minus_inverse_with(p, z, hyp2f1)
}

/// Logarithmic expansion about `z = 1` for integer `m = c − a − b`, written in
/// `w = 1 − z` with the branch of `log w` supplied by the caller.
pub(crate) fn log_case(p: &HypergeomParams, m: i64, w: C64, log_w: C64) -> Result<C64> {
    if p.terminating_degree().is_some() {
        return hyp2f1_series(p, one() - w);
    }
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    if m < 0 {
        let q = hp(p.c - p.a, p.c - p.b, p.c);
        return Ok(w.powi(m as i32) * log_case(&q, -m, w, log_w)?);
    }
    let (a, b) = (p.a, p.b);
    let mf = m as f64;
    let mut result = C64::new(0.0, 0.0);
    if m > 0 {
        let pref = gamma(C64::new(mf, 0.0))? * gamma(p.c)? * rgamma(a + mf) * rgamma(b + mf);
        let mut term = one();
        let mut sum = term;
        for n in 0..(m - 1) {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
            sum += term;
        }
        result += pref * sum;
    }
    let pref = gamma(p.c)? * rgamma(a) * rgamma(b);
    // ψ(n+1), ψ(n+m+1), ψ(a+n+m), ψ(b+n+m) at n = 0.
    let mut psi_n1 = digamma(one())?;
    let mut psi_nm1 = digamma(C64::new(mf + 1.0, 0.0))?;
    let mut psi_a = digamma(a + mf).map_err(|_| Error::ParameterPole("a + m is a pole"))?;
    let mut psi_b = digamma(b + mf).map_err(|_| Error::ParameterPole("b + m is a pole"))?;
    // (a+m)_n (b+m)_n / (n! (n+m)!) w^n
    let mut coef = C64::new(1.0 / gamma(C64::new(mf + 1.0, 0.0))?.re, 0.0);
    let mut sum = C64::new(0.0, 0.0);
    let mut small = 0;
    for n in 0..super::series::SERIES_CAP {
        let nf = n as f64;
        let bracket = if m == 0 {
            2.0 * psi_n1 - psi_a - psi_b - log_w
        } else {
            log_w - psi_n1 - psi_nm1 + psi_a + psi_b
        };
        let term = coef * bracket;
        sum += term;
        if term.norm() <= 1e-16 * sum.norm() && coef.norm() <= 1e-16 * sum.norm() {
            small += 1;
            if small >= 3 {
                let tail = if m == 0 {
                    pref * sum
                } else {
                    -pref * (-w).powi(m as i32) * sum
                };
                return Ok(result + tail);
            }
        } else {
            small = 0;
        }
        coef *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + mf + 1.0);
        psi_a += 1.0 / (a + mf + nf);
        psi_b += 1.0 / (b + mf + nf);
    }
    Err(Error::NoConvergence {
        terms: super::series::SERIES_CAP,
    })
}

/// Logarithmic expansion about `z = 1` when `c − a − b` is an integer.
pub fn log_connection_one(p: &HypergeomParams, z: C64) -> Result<C64> {
    let s = p.excess();
    if s.im != 0.0 || s.re != s.re.round() {
        return Err(Error::ParameterDomain("c - a - b must be an integer"));
    }
    if nonpositive_integer(p.c).is_some() && p.terminating_degree().is_none() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    let w = one() - z;
    log_case(p, s.re as i64, w, clog(w))
}
