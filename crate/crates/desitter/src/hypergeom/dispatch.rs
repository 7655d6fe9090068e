//! Region dispatch for `₂F₁` on the slit plane.

use std::fmt;

use super::gamma::nearest_integer;
use super::ode::continue_along;
use super::series::{hyp2f1_series, sum_series};
use super::transform::{
    connection_one_with, inverse_one_minus_with, inverse_z_with, log_case, one_minus_inverse_with, pfaff_with,
};
use super::{clog, cpow, HypergeomParams};
use crate::{Error, Result, C64};

/// Largest modulus of a transformed argument accepted for series summation.
const REGION_RADIUS: f64 = 0.7;
/// Below this distance to an integer, `a − b` or `c − a − b` is treated as
/// degenerate for the non-logarithmic connection formulas.
const NEAR_INTEGER: f64 = 1e-5;

/// The evaluation route chosen for a given argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Polynomial case, summed exactly.
    Terminating,
    /// Direct series in `z`.
    Series,
    /// Series in `z/(z−1)`.
    Pfaff,
    /// Series in `1−z`, non-integer `c−a−b`.
    ConnectionOne,
    /// Logarithmic series in `1−z`, integer `c−a−b`.
    LogConnectionOne,
    /// Series in `1/z`.
    InverseZ,
    /// Series in `1/(1−z)`.
    InverseOneMinusZ,
    /// Series in `1−1/z`.
    OneMinusInverseZ,
    /// Taylor continuation along the differential equation.
    Continuation,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::Terminating => "terminating",
            Region::Series => "series",
            Region::Pfaff => "pfaff",
            Region::ConnectionOne => "connection_one",
            Region::LogConnectionOne => "log_connection_one",
            Region::InverseZ => "inverse_z",
            Region::InverseOneMinusZ => "inverse_one_minus_z",
            Region::OneMinusInverseZ => "one_minus_inverse_z",
            Region::Continuation => "continuation",
        };
        f.write_str(s)
    }
}

fn on_cut(z: C64) -> bool {
    z.im == 0.0 && z.re >= 1.0
}

fn exact_integer(z: C64) -> Option<i64> {
    let (n, dist) = nearest_integer(z);
    (dist == 0.0).then_some(n)
}

/// Region that [`hyp2f1`] uses at `z`.
pub fn hyp2f1_region(p: &HypergeomParams, z: C64) -> Result<Region> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::DomainError("non-finite argument"));
    }
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    if p.terminating_degree().is_some() {
        return Ok(Region::Terminating);
    }
    if on_cut(z) {
        return Err(Error::OnCut);
    }
    let s = p.excess();
    let s_int = exact_integer(s);
    let s_far = nearest_integer(s).1 >= NEAR_INTEGER;
    let d_far = nearest_integer(p.a - p.b).1 >= NEAR_INTEGER;
    let one = C64::new(1.0, 0.0);

    let mut candidates = vec![(Region::Series, z.norm()), (Region::Pfaff, (z / (z - 1.0)).norm())];
    if s_far {
        candidates.push((Region::ConnectionOne, (one - z).norm()));
        candidates.push((Region::OneMinusInverseZ, (one - 1.0 / z).norm()));
    } else if s_int.is_some() {
        candidates.push((Region::LogConnectionOne, (one - z).norm()));
    }
    if d_far {
        candidates.push((Region::InverseZ, (1.0 / z).norm()));
        candidates.push((Region::InverseOneMinusZ, (1.0 / (one - z)).norm()));
    }
    let (region, r) = candidates
        .into_iter()
        .fold((Region::Continuation, f64::INFINITY), |best, c| {
            if c.1 < best.1 {
                c
            } else {
                best
            }
        });
    if r <= REGION_RADIUS {
        Ok(region)
    } else {
        Ok(Region::Continuation)
    }
}

fn series_inner(p: &HypergeomParams, w: C64) -> Result<C64> {
    if p.terminating_degree().is_some() {
        return hyp2f1_series(p, w);
    }
    if p.has_c_pole() {
        return Err(Error::ParameterPole("transformed c is a nonpositive integer"));
    }
    sum_series(p, w)
}

/// Gauss hypergeometric function `₂F₁(a, b; c; z)` on `ℂ∖[1,∞)`, and on all
/// of `ℂ` when it is a polynomial.
pub fn hyp2f1(p: &HypergeomParams, z: C64) -> Result<C64> {
    let region = hyp2f1_region(p, z)?;
    let one = C64::new(1.0, 0.0);
    match region {
        Region::Terminating => hyp2f1_series(p, z),
        Region::Series => sum_series(p, z),
        Region::Pfaff => pfaff_with(p, z, series_inner),
        Region::ConnectionOne => {
            let w = one - z;
            connection_one_with(p, w, cpow(w, p.excess()), series_inner)
        }
        Region::LogConnectionOne => {
            let w = one - z;
            log_case(p, p.excess().re.round() as i64, w, clog(w))
        }
        Region::InverseZ => inverse_z_with(p, 1.0 / z, cpow(-z, -p.a), cpow(-z, -p.b), series_inner),
        Region::InverseOneMinusZ => inverse_one_minus_with(p, z, series_inner),
        Region::OneMinusInverseZ => one_minus_inverse_with(p, z, series_inner),
        Region::Continuation => continuation(p, z),
    }
}

/// `d/dz ₂F₁(a, b; c; z) = (ab/c) ₂F₁(a+1, b+1; c+1; z)`.
pub fn hyp2f1_derivative(p: &HypergeomParams, z: C64) -> Result<C64> {
    if p.has_c_pole() {
        return Err(Error::ParameterPole("c is a nonpositive integer"));
    }
    let ab = p.a * p.b;
    if ab == C64::new(0.0, 0.0) {
        return if on_cut(z) { Err(Error::OnCut) } else { Ok(ab) };
    }
    Ok(ab / p.c * hyp2f1(&p.shifted(), z)?)
}

/// Value and derivative at a point with `|z| = 0.5` by direct summation.
pub(crate) fn start_values(p: &HypergeomParams, z0: C64) -> Result<(C64, C64)> {
    let f = series_inner(p, z0)?;
    let ab = p.a * p.b;
    let df = if ab == C64::new(0.0, 0.0) {
        ab
    } else {
        ab / p.c * series_inner(&p.shifted(), z0)?
    };
    Ok((f, df))
}

fn continuation(p: &HypergeomParams, z: C64) -> Result<C64> {
    let path = if z.re <= 0.5 {
        vec![z * (0.5 / z.norm()), z]
    } else {
        let s = if z.im < 0.0 { -1.0 } else { 1.0 };
        vec![C64::new(0.0, 0.5 * s), C64::new(z.re, s * z.im.abs().max(0.5)), z]
    };
    let (f0, df0) = start_values(p, path[0])?;
    Ok(continue_along(p, &path, f0, df0)?.0)
}
