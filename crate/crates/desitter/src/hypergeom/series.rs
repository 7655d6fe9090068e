//! Direct summation of the Gauss series.

use super::HypergeomParams;
use crate::{Error, Result, C64};

pub(crate) const SERIES_TOL: f64 = 1e-14;
pub(crate) const SERIES_CAP: usize = 1_000_000;

/// Partial sums of `Σ (a)_k (b)_k / ((c)_k k!) z^k`.
///
/// A polynomial (`a` or `b` a nonpositive integer) is summed exactly for any
/// `z`; otherwise `|z| < 1` is required and summation stops once three
/// consecutive terms fall below `1e-14` relative to the partial sum.
pub fn hyp2f1_series(p: &HypergeomParams, z: C64) -> Result<C64> {
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    if let Some(n) = p.terminating_degree() {
        let mut term = C64::new(1.0, 0.0);
        let mut sum = term;
        for k in 0..n {
            let kf = k as f64;
            term *= (p.a + kf) * (p.b + kf) / ((p.c + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }
    if z.norm() >= 1.0 {
        return Err(Error::DomainError("series requires |z| < 1"));
    }
    sum_series(p, z)
}

pub(crate) fn sum_series(p: &HypergeomParams, z: C64) -> Result<C64> {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..SERIES_CAP {
        let kf = k as f64;
        term *= (p.a + kf) * (p.b + kf) / ((p.c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.norm() <= SERIES_TOL * sum.norm() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence { terms: SERIES_CAP })
}
