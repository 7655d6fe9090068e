//! The `d = 1` model: atomic spectral measures on `ℝ`, the matrix
//! coefficients `φ^{v,w}(z) = ∫ e^{izp} dP(p)` on the strip `|Im z| ≤ π`,
//! their boundary jump and the two dimensional irreducible oracle.

use std::f64::consts::PI;

use crate::{Error, Result, C64};

/// Finite positive measure `Σ w_k δ_{p_k}`, atoms sorted by location.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicSpectralMeasure {
    atoms: Vec<(f64, f64)>,
    symmetric: bool,
}

impl AtomicSpectralMeasure {
    /// Builds the measure. Weights must be positive and finite, locations
    /// finite and distinct.
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.iter().any(|&(p, w)| !p.is_finite() || !w.is_finite() || w <= 0.0) {
            return Err(Error::DomainError("atoms need finite locations and positive weights"));
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        if atoms.windows(2).any(|x| x[0].0 == x[1].0) {
            return Err(Error::DomainError("atom locations must be distinct"));
        }
        let n = atoms.len();
        let symmetric = (0..n).all(|k| {
            let (p, w) = atoms[k];
            let (q, v) = atoms[n - 1 - k];
            p == -q && w == v
        });
        Ok(Self { atoms, symmetric })
    }

    /// `½(δ_m + δ_{−m})`, the spectral measure of the two dimensional model.
    pub fn two_atom(m: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::DomainError("m must be positive"));
        }
        Self::new(vec![(m, 0.5), (-m, 0.5)])
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// Invariance under `p ↦ −p`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.1).sum()
    }

    /// Multiplies every weight by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.atoms.iter().map(|&(p, w)| (p, c * w)).collect())
    }
}

/// A point of the closed strip `|Im z| ≤ π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint(C64);

impl StripPoint {
    pub fn new(z: C64) -> Result<Self> {
        if !(z.im.abs() <= PI) || !z.re.is_finite() {
            return Err(Error::DomainError("strip point needs |Im z| <= pi"));
        }
        Ok(Self(z))
    }

    pub fn z(&self) -> C64 {
        self.0
    }
}

/// `φ(z) = Σ w_k e^{i z p_k}`.
pub fn phi_vw(measure: &AtomicSpectralMeasure, z: StripPoint) -> C64 {
    let z = z.z();
    measure.atoms.iter().map(|&(p, w)| w * (C64::i() * z * p).exp()).sum()
}

/// `φ(x − πi) − φ(x + πi) = 2i Σ w_k sinh(πp_k) sin(p_k x)` for a
/// symmetric measure.
pub fn jump_d1(measure: &AtomicSpectralMeasure, x: f64) -> Result<C64> {
    if !measure.symmetric {
        return Err(Error::NotSymmetric);
    }
    let s: f64 = measure
        .atoms
        .iter()
        .map(|&(p, w)| w * (PI * p).sinh() * (p * x).sin())
        .sum();
    Ok(C64::new(0.0, 2.0 * s))
}

/// The jump with the opposite orientation, `φ(x + πi) − φ(x − πi)`, which
/// for the two atom measure is `−2i sinh(πm) sin(mx)`.
pub fn jump_d1_opposite(measure: &AtomicSpectralMeasure, x: f64) -> Result<C64> {
    Ok(-jump_d1(measure, x)?)
}

/// `‖e^{tA}v‖² = Σ w_k e^{2tp_k}` for `|t| < π/2`.
pub fn temperedness_profile(measure: &AtomicSpectralMeasure, t: f64) -> Result<f64> {
    if !(t.abs() < PI / 2.0) {
        return Err(Error::DomainError("profile needs |t| < pi/2"));
    }
    Ok(measure.atoms.iter().map(|&(p, w)| w * (2.0 * t * p).exp()).sum())
}

/// `cos(mz)`, the matrix coefficient of the two dimensional model.
pub fn two_by_two_oracle(m: f64, z: C64) -> Result<C64> {
    if !(m > 0.0) {
        return Err(Error::DomainError("m must be positive"));
    }
    Ok((m * z).cos())
}

/// Jump of the scalar kernel `cosh(λt)` across the cut for `t` the signed
/// rapidity inside the closed cone: `2i sin(πλ) sinh(λt)`. For `λ = im`
/// this is `−2i sinh(πm) sin(mt)`.
pub fn scalar_kernel_jump(lambda: C64, t: f64) -> C64 {
    2.0 * C64::i() * (PI * lambda).sin() * (lambda * t).sinh()
}
