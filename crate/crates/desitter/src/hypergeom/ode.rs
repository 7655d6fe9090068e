//! Analytic continuation of `₂F₁` by Taylor stepping along the
//! hypergeometric differential equation
//! `z(1−z)F″ + [c − (a+b+1)z]F′ − abF = 0`.
//!
//! Used where no transformation brings the argument into a disc of radius
//! 0.7, and where `c − a − b` or `a − b` are close to (but not) integers so
//! that the connection coefficients cancel catastrophically.

use super::HypergeomParams;
use crate::{Error, Result, C64};

const TERM_CAP: usize = 4000;

/// One Taylor step from `zc` (value `f`, derivative `df`) by `h`.
fn taylor_step(p: &HypergeomParams, zc: C64, f: C64, df: C64, h: C64) -> Result<(C64, C64)> {
    let ab = p.a * p.b;
    let p0 = zc * (1.0 - zc);
    let p1 = 1.0 - 2.0 * zc;
    let q0 = p.c - (p.a + p.b + 1.0) * zc;
    let q1 = -(p.a + p.b + 1.0);
    let (mut c0, mut c1) = (f, df);
    let mut hk = C64::new(1.0, 0.0);
    let mut val = c0 + c1 * h;
    let mut der = c1;
    let mut small = 0;
    for k in 0..TERM_CAP {
        let kf = k as f64;
        let c2 = -((p1 * kf * (kf + 1.0) + q0 * (kf + 1.0)) * c1 + (-kf * (kf - 1.0) + q1 * kf - ab) * c0)
            / (p0 * (kf + 1.0) * (kf + 2.0));
        // hk = h^{k+1}
        hk *= h;
        let t_val = c2 * hk * h;
        let t_der = c2 * (kf + 2.0) * hk;
        val += t_val;
        der += t_der;
        let scale = val.norm() + (der * h).norm();
        if t_val.norm() <= 1e-17 * scale && (t_der * h).norm() <= 1e-17 * scale {
            small += 1;
            if small >= 3 {
                return Ok((val, der));
            }
        } else {
            small = 0;
        }
        c0 = c1;
        c1 = c2;
    }
    Err(Error::NoConvergence { terms: TERM_CAP })
}

/// Continue `(F, F′)` from `path[0]` through the remaining points of `path`.
pub(crate) fn continue_along(p: &HypergeomParams, path: &[C64], f0: C64, df0: C64) -> Result<(C64, C64)> {
    let (mut f, mut df) = (f0, df0);
    let mut zc = path[0];
    for &target in &path[1..] {
        let mut guard = 0;
        loop {
            let remaining = target - zc;
            let dist = remaining.norm();
            if dist == 0.0 {
                break;
            }
            let radius = zc.norm().min((1.0 - zc).norm());
            if radius < 1e-12 {
                return Err(Error::DomainError("continuation path hits a singular point"));
            }
            let step = 0.5 * radius;
            let h = if dist <= step {
                remaining
            } else {
                remaining * (step / dist)
            };
            let (nf, ndf) = taylor_step(p, zc, f, df, h)?;
            f = nf;
            df = ndf;
            zc = if dist <= step { target } else { zc + h };
            guard += 1;
            if guard > 10_000 {
                return Err(Error::NoConvergence { terms: guard });
            }
        }
    }
    Ok((f, df))
}
