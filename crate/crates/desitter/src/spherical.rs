//! Scalar spherical functions and invariant kernels on `dSᵈ`, their
//! boundary values on the light cone cut, the jump `D⁺ − D⁻`, limiting
//! constants and the horospherical functions `Ψ_λ`, `Φ_λ`.
//!
//! Throughout `ρ = (d−1)/2` and
//! `φ_λ(a_t) = ₂F₁(ρ+λ, ρ−λ; d/2; (1 − cosh t)/2)`.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::hypergeom::{
    cpow, gamma, hyp2f1, hyp2f1_boundary, legendre_q, nearest_integer, rgamma, CutSide, HypergeomParams,
};
use crate::lorentz_geometry::{
    beta, beta_sesq, causal_classify, pair_in_cut, CausalClass, ComplexLorentzVector, LorentzVector, Sign,
};
use crate::modular_d1;
use crate::{Error, Result, C64};

/// Dimension `d` and spectral parameter `λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalParams {
    pub d: u32,
    pub lambda: C64,
}

impl SphericalParams {
    pub fn new(d: u32, lambda: impl Into<C64>) -> Self {
        Self {
            d,
            lambda: lambda.into(),
        }
    }

    /// `ρ = (d−1)/2`.
    pub fn rho(&self) -> f64 {
        (self.d as f64 - 1.0) / 2.0
    }

    /// `(ρ+λ, ρ−λ; d/2)`.
    pub fn hyp_params(&self) -> HypergeomParams {
        let rho = self.rho();
        HypergeomParams::new(rho + self.lambda, rho - self.lambda, self.d as f64 / 2.0)
    }

    /// `λ ∈ iℝ_{≥0} ∪ (0, ρ)`, the parameter range of the positive definite
    /// kernels considered for boundary values.
    pub fn is_admissible(&self) -> bool {
        let l = self.lambda;
        (l.re == 0.0 && l.im >= 0.0) || (l.im == 0.0 && l.re > 0.0 && l.re < self.rho())
    }

    /// Kostant's criterion: `φ_λ` is positive definite iff `λ ∈ iℝ` or
    /// `λ ∈ [−ρ, ρ]`.
    pub fn kostant_positive_definite(&self) -> bool {
        let l = self.lambda;
        l.re == 0.0 || (l.im == 0.0 && l.re.abs() <= self.rho())
    }
}

/// `λ_m = √(ρ² − m²)` for `m ≤ ρ` and `i√(m² − ρ²)` otherwise.
pub fn lambda_of_mass(m: f64, d: u32) -> C64 {
    let rho = (d as f64 - 1.0) / 2.0;
    if m <= rho {
        C64::new((rho * rho - m * m).sqrt(), 0.0)
    } else {
        C64::new(0.0, (m * m - rho * rho).sqrt())
    }
}

fn hyp_arg_on_cut(x: C64) -> bool {
    x.im.abs() <= 1e-14 * (1.0 + x.norm()) && x.re >= 1.0 - 1e-14
}

/// `φ_λ(exp(th)) = ₂F₁(ρ+λ, ρ−λ; d/2; (1 − cosh t)/2)`.
pub fn spherical_phi(p: &SphericalParams, t: C64) -> Result<C64> {
    let x = (1.0 - t.cosh()) / 2.0;
    if hyp_arg_on_cut(x) {
        return Err(Error::OnCut);
    }
    hyp2f1(&p.hyp_params(), x)
}

/// `Q_λ(z, w) = ₂F₁(ρ+λ, ρ−λ; d/2; (1 − β(z, w̄))/2)` on the cut domain.
pub fn kernel_q(p: &SphericalParams, z: &ComplexLorentzVector, w: &ComplexLorentzVector) -> Result<C64> {
    if !pair_in_cut(z, w)? {
        return Err(Error::OnCut);
    }
    let x = (1.0 - beta_sesq(z, w)?) / 2.0;
    hyp2f1(&p.hyp_params(), x)
}

/// `φ_{μ,λ}(exp(th)) = ((1 + cosh t)/2)^{−μ/2}
/// ₂F₁((1−μ)/2 + λ, (1−μ)/2 − λ; 1; (1 − cosh t)/2)` for `d = 2`.
pub fn chi_spherical_d2(mu: f64, p: &SphericalParams, t: C64) -> Result<C64> {
    if p.d != 2 {
        return Err(Error::ParameterDomain("chi_spherical_d2 needs d = 2"));
    }
    let ch = t.cosh();
    let x = (1.0 - ch) / 2.0;
    if hyp_arg_on_cut(x) {
        return Err(Error::OnCut);
    }
    let h = HypergeomParams::new((1.0 - mu) / 2.0 + p.lambda, (1.0 - mu) / 2.0 - p.lambda, 1.0);
    Ok(cpow((1.0 + ch) / 2.0, C64::new(-mu / 2.0, 0.0)) * hyp2f1(&h, x)?)
}

/// Position of `y` relative to the causal closure `Ī(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionTag {
    OutsideClosure,
    FutureInterior,
    PastInterior,
    OnBoundary,
}

/// Region of `y` relative to `x`.
pub fn region_tag(x: &LorentzVector, y: &LorentzVector) -> Result<RegionTag> {
    Ok(match causal_classify(x, y)? {
        CausalClass::Spacelike => RegionTag::OutsideClosure,
        CausalClass::Future => RegionTag::FutureInterior,
        CausalClass::Past => RegionTag::PastInterior,
        CausalClass::LightlikeBoundary => RegionTag::OnBoundary,
    })
}

/// The i0 prescription of `D^±` inside `I^±(x)`: `D⁺` is `F(τ − i0)` in
/// `I⁺(x)` and `F(τ + i0)` in `I⁻(x)`, `D⁻` the other way round. `None` off
/// the closure, where both are the plain value.
pub fn boundary_side(sign: Sign, region: RegionTag) -> Result<Option<CutSide>> {
    match (sign, region) {
        (_, RegionTag::OnBoundary) => Err(Error::OnLightcone),
        (_, RegionTag::OutsideClosure) => Ok(None),
        (Sign::Plus, RegionTag::FutureInterior) | (Sign::Minus, RegionTag::PastInterior) => Ok(Some(CutSide::Below)),
        (Sign::Plus, RegionTag::PastInterior) | (Sign::Minus, RegionTag::FutureInterior) => Ok(Some(CutSide::Above)),
    }
}

/// Boundary value `D^±_{λ,x}(y)` off the light cone of `x`.
pub fn boundary_d(p: &SphericalParams, sign: Sign, x: &LorentzVector, y: &LorentzVector) -> Result<C64> {
    let region = region_tag(x, y)?;
    let tau = (1.0 - beta(x, y)?) / 2.0;
    match boundary_side(sign, region)? {
        None => hyp2f1(&p.hyp_params(), C64::new(tau, 0.0)),
        Some(side) => hyp2f1_boundary(&p.hyp_params(), tau, side),
    }
}

/// `D⁺ − D⁻` evaluated from the two boundary values.
pub fn jump_from_boundary(p: &SphericalParams, x: &LorentzVector, y: &LorentzVector) -> Result<C64> {
    Ok(boundary_d(p, Sign::Plus, x, y)? - boundary_d(p, Sign::Minus, x, y)?)
}

/// `ConstOne = Γ(d/2)Γ((d−2)/2)/(Γ(ρ+λ)Γ(ρ−λ))` for `d > 2`.
pub fn limit_const_one(p: &SphericalParams) -> Result<C64> {
    if p.d <= 2 {
        return Err(Error::ParameterDomain("const_one needs d > 2"));
    }
    let d = p.d as f64;
    let rho = p.rho();
    Ok(gamma(C64::new(d / 2.0, 0.0))?
        * gamma(C64::new((d - 2.0) / 2.0, 0.0))?
        * rgamma(rho + p.lambda)
        * rgamma(rho - p.lambda))
}

/// `ConstTwo = 1/(Γ(½+λ)Γ(½−λ))`, the `d = 2` constant.
pub fn limit_const_two(lambda: C64) -> C64 {
    rgamma(0.5 + lambda) * rgamma(0.5 - lambda)
}

/// Jump constant `c_λ`.
///
/// Odd `d ≥ 3`: `c_λ = 2i(−1)^{(d−1)/2} ConstOne`. Even `d ≥ 2`:
/// `c_λ = (−1)^{d/2} 2πi/(Γ(½+λ)Γ(½−λ)) = (−1)^{d/2} 2i cos(πλ)`. The
/// constant vanishes exactly at the poles of the Γ-denominators.
pub fn jump_constant(p: &SphericalParams) -> Result<C64> {
    let i = C64::i();
    match p.d {
        0 | 1 => Err(Error::ParameterDomain("jump constants need d >= 2")),
        d if d % 2 == 1 => {
            let sgn = if ((d - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            Ok(2.0 * i * sgn * limit_const_one(p)?)
        }
        d => {
            let sgn = if (d / 2) % 2 == 0 { 1.0 } else { -1.0 };
            Ok(sgn * 2.0 * PI * i * limit_const_two(p.lambda))
        }
    }
}

/// Closed form of `D⁺ − D⁻` in `I⁺(x)` as a function of `β = β(x, y) < −1`.
pub fn jump_future_closed_form(p: &SphericalParams, b: f64) -> Result<C64> {
    if b >= -1.0 {
        return Err(Error::DomainError("closed form needs beta < -1"));
    }
    let c = jump_constant(p)?;
    if c == C64::new(0.0, 0.0) {
        return Ok(c);
    }
    let d = p.d as f64;
    let arg = C64::new((1.0 + b) / 2.0, 0.0);
    if p.d % 2 == 1 {
        let h = HypergeomParams::new(0.5 - p.lambda, 0.5 + p.lambda, (4.0 - d) / 2.0);
        let pref = (-(1.0 + b) / 2.0).powf((2.0 - d) / 2.0);
        Ok(c * pref * hyp2f1(&h, arg)?)
    } else {
        Ok(c * hyp2f1(&p.hyp_params(), arg)?)
    }
}

/// Jump `D⁺ − D⁻` at `y`: zero off `Ī(x)`, `±` the closed form in `I^±(x)`.
/// For `d = 1` the closed form `2i sin(πλ) sinh(λt)` of the one dimensional
/// model is used, with `t` the signed rapidity of `y` relative to `x`.
pub fn jump(p: &SphericalParams, x: &LorentzVector, y: &LorentzVector) -> Result<C64> {
    let region = region_tag(x, y)?;
    let sgn = match region {
        RegionTag::OnBoundary => return Err(Error::OnLightcone),
        RegionTag::OutsideClosure => return Ok(C64::new(0.0, 0.0)),
        RegionTag::FutureInterior => 1.0,
        RegionTag::PastInterior => -1.0,
    };
    let b = beta(x, y)?;
    if p.d == 1 {
        let t = sgn * (-b).acosh();
        return Ok(modular_d1::scalar_kernel_jump(p.lambda, t));
    }
    Ok(sgn * jump_future_closed_form(p, b)?)
}

/// Huygens predicate: the jump is supported on the light cone iff
/// `d ≥ 4` is even and `λ ∈ {½, 3/2, …, (d−3)/2}`.
pub fn huygens_support_on_boundary(p: &SphericalParams) -> Result<bool> {
    if p.d < 2 {
        return Err(Error::ParameterDomain("Huygens predicate needs d >= 2"));
    }
    if !p.is_admissible() {
        return Err(Error::ParameterDomain("lambda outside iR_{>=0} u (0, (d-1)/2)"));
    }
    if p.d % 2 == 1 || p.d < 4 || p.lambda.im != 0.0 {
        return Ok(false);
    }
    let kmax = p.d / 2 - 2;
    Ok((0..=kmax).any(|k| (p.lambda.re - (k as f64 + 0.5)).abs() < 1e-12))
}

/// `|Γ(ρ + is)|²` through the product formulas: for `d = 2(k+1)`
/// `π ∏_{j<k}(s² + (j+½)²)/cosh(πs)`, for `d = 2k+1`
/// `π ∏_{j<k}(s² + j²)/(s sinh(πs))`.
pub fn gamma_abs_sq_product(d: u32, s: f64) -> Result<f64> {
    if d < 2 || s <= 0.0 {
        return Err(Error::ParameterDomain("product formula needs d >= 2, s > 0"));
    }
    if d % 2 == 0 {
        let k = d / 2 - 1;
        let prod: f64 = (0..k).map(|j| s * s + (j as f64 + 0.5).powi(2)).product();
        Ok(PI * prod / (PI * s).cosh())
    } else {
        let k = (d - 1) / 2;
        let prod: f64 = (0..k).map(|j| s * s + (j as f64).powi(2)).product();
        Ok(PI * prod / (s * (PI * s).sinh()))
    }
}

/// `lim_{t→π⁻} cos(t/2)^{d−2} φ_{is}(a_{it})` in closed form, `d ≥ 3`, `s > 0`.
///
/// Even `d = 2(k+1)`: `k!(k−1)! cosh(πs)/(π ∏_{j=0}^{k−1}(s² + (j+½)²))`.
/// Odd `d = 2k+1`: `s sinh(πs) ∏_{j=0}^{k−1}(½+j) ∏_{j=0}^{k−2}(½+j) /
/// ∏_{j=0}^{k−1}(s² + j²)`. Empty products are 1.
pub fn boundary_limit_value(p: &SphericalParams) -> Result<f64> {
    let s = p.lambda.im;
    if p.lambda.re != 0.0 || s <= 0.0 || p.d < 3 {
        return Err(Error::ParameterDomain("limit needs lambda = is, s > 0, d >= 3"));
    }
    if p.d % 2 == 0 {
        let k = p.d / 2 - 1;
        let fact = |n: u32| (1..=n).map(|j| j as f64).product::<f64>();
        let prod: f64 = (0..k).map(|j| s * s + (j as f64 + 0.5).powi(2)).product();
        Ok(fact(k) * fact(k - 1) * (PI * s).cosh() / (PI * prod))
    } else {
        let k = (p.d - 1) / 2;
        let half = |n: u32| (0..n).map(|j| 0.5 + j as f64).product::<f64>();
        let prod: f64 = (0..k).map(|j| s * s + (j as f64).powi(2)).product();
        Ok(s * (PI * s).sinh() * half(k) * half(k - 1) / prod)
    }
}

/// `p_λ(g) = β(g(e₀+e₁), −e₁)^{−λ−ρ} = (g₁₀ + g₁₁)^{−λ−ρ}`.
pub fn horospherical_p(lambda: C64, d: u32, g: &DMatrix<f64>) -> Result<C64> {
    if g.nrows() != d as usize + 1 || g.ncols() != d as usize + 1 {
        return Err(Error::DimensionMismatch(g.nrows(), d as usize + 1));
    }
    let base = g[(1, 0)] + g[(1, 1)];
    if !(base > 0.0) {
        return Err(Error::DomainError("horospherical base must be positive"));
    }
    let rho = (d as f64 - 1.0) / 2.0;
    Ok(cpow(C64::new(base, 0.0), -lambda - rho))
}

/// `c⁺(λ) = 2^{−λ+(d−3)/2} Γ(ρ) Γ(λ − (d−3)/2)/Γ(λ+1)`.
pub fn c_plus(lambda: C64, d: u32) -> Result<C64> {
    let df = d as f64;
    let rho = (df - 1.0) / 2.0;
    let g = gamma(lambda - (df - 3.0) / 2.0).map_err(|_| Error::ParameterPole("lambda - (d-3)/2"))?;
    Ok(cpow(C64::new(2.0, 0.0), -lambda + (df - 3.0) / 2.0) * gamma(C64::new(rho, 0.0))? * g * rgamma(lambda + 1.0))
}

/// `Φ_λ(h a_t e₁) = cosh(t)^{−λ−ρ} ₂F₁((λ+ρ)/2, (λ+ρ+1)/2; 1+λ; 1/cosh²t)`,
/// the continuation of `Ψ_λ/c⁺(λ)` to all `λ` with `1+λ ∉ −ℕ₀`.
pub fn phi_horospherical(lambda: C64, d: u32, t: f64) -> Result<C64> {
    if !(t > 0.0) {
        return Err(Error::DomainError("t must be positive"));
    }
    let rho = (d as f64 - 1.0) / 2.0;
    let ch = t.cosh();
    let h = HypergeomParams::new((lambda + rho) / 2.0, (lambda + rho + 1.0) / 2.0, 1.0 + lambda);
    Ok(cpow(C64::new(ch, 0.0), -lambda - rho) * hyp2f1(&h, C64::new(1.0 / (ch * ch), 0.0))?)
}

/// `c⁺(λ) Φ_λ`, the series form of `Ψ_λ`.
pub fn psi_lambda_series(lambda: C64, d: u32, t: f64) -> Result<C64> {
    Ok(c_plus(lambda, d)? * phi_horospherical(lambda, d, t)?)
}

/// `Ψ_λ(a_t e₁)`, the H-average of `p_λ`, through the Legendre function
/// `Q^{d/2−1}_{λ−½}(cosh t)`. The defining integral converges iff
/// `Re λ > (d−3)/2`.
pub fn psi_lambda(lambda: C64, d: u32, t: f64) -> Result<C64> {
    let df = d as f64;
    if d < 2 {
        return Err(Error::ParameterDomain("psi_lambda needs d >= 2"));
    }
    if lambda.re <= (df - 3.0) / 2.0 {
        return Err(Error::ConvergenceDomain);
    }
    if !(t > 0.0) {
        return Err(Error::DomainError("t must be positive"));
    }
    let mu = df / 2.0 - 1.0;
    let i = C64::i();
    let pref = (i * PI * (2.0 - df) / 2.0).exp()
        * 2f64.powf((df - 2.0) / 2.0)
        * gamma(C64::new((df - 1.0) / 2.0, 0.0))?
        * gamma(lambda - (df - 3.0) / 2.0)?
        * rgamma(lambda + (df - 1.0) / 2.0)
        / (PI.sqrt() * t.sinh().powf(mu));
    let q = legendre_q(C64::new(mu, 0.0), lambda - 0.5, C64::new(t.cosh(), 0.0))?;
    Ok(pref * q)
}

/// `c(λ) = 2^{ρ−λ−1} Γ(d/2) Γ(−λ)/(√π Γ(ρ−λ))`.
pub fn decomposition_coefficient(lambda: C64, d: u32) -> Result<C64> {
    let df = d as f64;
    let rho = (df - 1.0) / 2.0;
    let g = gamma(-lambda).map_err(|_| Error::ParameterPole("lambda is an integer"))?;
    Ok(
        cpow(C64::new(2.0, 0.0), rho - lambda - 1.0) * gamma(C64::new(df / 2.0, 0.0))? * g * rgamma(rho - lambda)
            / PI.sqrt(),
    )
}

/// Result of [`decompose_q`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub c_plus_lambda: C64,
    pub c_minus_lambda: C64,
    pub lhs: C64,
    pub rhs: C64,
    pub residual: f64,
}

/// `Q_λ(h a_t e₁, e₁) = ₂F₁((ρ+λ)/2, (ρ−λ)/2; d/2; −sinh²t)` against
/// `c(λ) Φ_λ + c(−λ) Φ_{−λ}` for `λ ∉ ℤ`, `t > 0`.
pub fn decompose_q(lambda: C64, d: u32, t: f64) -> Result<Decomposition> {
    if nearest_integer(lambda).1 == 0.0 {
        return Err(Error::ParameterPole("lambda is an integer"));
    }
    if !(t > 0.0) {
        return Err(Error::DomainError("t must be positive"));
    }
    let rho = (d as f64 - 1.0) / 2.0;
    let h = HypergeomParams::new((rho + lambda) / 2.0, (rho - lambda) / 2.0, d as f64 / 2.0);
    let lhs = hyp2f1(&h, C64::new(-t.sinh().powi(2), 0.0))?;
    let cp = decomposition_coefficient(lambda, d)?;
    let cm = decomposition_coefficient(-lambda, d)?;
    let rhs = cp * phi_horospherical(lambda, d, t)? + cm * phi_horospherical(-lambda, d, t)?;
    Ok(Decomposition {
        c_plus_lambda: cp,
        c_minus_lambda: cm,
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    })
}
