//! Minkowski space `ℝ^{1,d}`, de Sitter space `dSᵈ = {β(x,x) = −1}` and its
//! complexification, cut domains, causal classification, wedges, the boost
//! flow and the strip atlas of `cosh`.
//!
//! The Minkowski form is `β(x,y) = x₀y₀ − x₁y₁ − ⋯ − x_d y_d`.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::{Error, Result, C64};

/// Orientation label used for wedges `±W⁺`, crowns `Ξ±` and boundary values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// A point of `ℝ^{1,d}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzVector {
    coords: Vec<f64>,
}

impl LorentzVector {
    /// Coordinates `(x₀, …, x_d)`, at least two of them.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch(coords.len(), 2));
        }
        Ok(Self { coords })
    }

    /// Basis vector `e_k` of `ℝ^{1,d}`.
    pub fn basis(d: usize, k: usize) -> Self {
        let mut coords = vec![0.0; d + 1];
        coords[k] = 1.0;
        Self { coords }
    }

    pub fn d(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coords: self.coords.iter().map(|x| s * x).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_dim(self.d(), other.d())?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn to_complex(&self) -> ComplexLorentzVector {
        ComplexLorentzVector {
            coords: self.coords.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn to_dvector(&self) -> DVector<f64> {
        DVector::from_column_slice(&self.coords)
    }
}

/// A point of `ℂ^{1+d}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexLorentzVector {
    coords: Vec<C64>,
}

impl ComplexLorentzVector {
    pub fn new(coords: Vec<C64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch(coords.len(), 2));
        }
        Ok(Self { coords })
    }

    /// `i e₀`, the base point of the crown `Ξ₊`.
    pub fn i_e0(d: usize) -> Self {
        let mut coords = vec![C64::new(0.0, 0.0); d + 1];
        coords[0] = C64::new(0.0, 1.0);
        Self { coords }
    }

    pub fn d(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[C64] {
        &self.coords
    }

    pub fn conj(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            coords: self.coords.iter().map(|z| s * z).collect(),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn re(&self) -> LorentzVector {
        LorentzVector {
            coords: self.coords.iter().map(|z| z.re).collect(),
        }
    }

    pub fn im(&self) -> LorentzVector {
        LorentzVector {
            coords: self.coords.iter().map(|z| z.im).collect(),
        }
    }
}

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(a, b))
    }
}

/// `β(x, y) = x₀y₀ − 𝐱·𝐲`.
pub fn beta(x: &LorentzVector, y: &LorentzVector) -> Result<f64> {
    same_dim(x.d(), y.d())?;
    Ok(form(&x.coords, &y.coords))
}

fn form<T>(x: &[T], y: &[T]) -> T
where
    T: Copy + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let mut acc = x[0] * y[0];
    for k in 1..x.len() {
        acc = acc - x[k] * y[k];
    }
    acc
}

/// Complex bilinear extension `β(z, w)`.
pub fn beta_complex(z: &ComplexLorentzVector, w: &ComplexLorentzVector) -> Result<C64> {
    same_dim(z.d(), w.d())?;
    Ok(form(&z.coords, &w.coords))
}

/// Sesquilinear pairing `β(z, w̄)`.
pub fn beta_sesq(z: &ComplexLorentzVector, w: &ComplexLorentzVector) -> Result<C64> {
    beta_complex(z, &w.conj())
}

fn membership_tol(norm_sq: f64) -> f64 {
    1e-10 * (1.0 + norm_sq)
}

/// `|β(x,x) + 1| ≤ 1e-10 (1 + ‖x‖²)`.
pub fn on_desitter(x: &LorentzVector) -> bool {
    (form(&x.coords, &x.coords) + 1.0).abs() <= membership_tol(x.norm_sq())
}

/// Complex analogue of [`on_desitter`] for the bilinear form.
pub fn on_complex_desitter(z: &ComplexLorentzVector) -> bool {
    (form(&z.coords, &z.coords) + 1.0).norm() <= membership_tol(z.norm_sq())
}

fn require_ds(x: &LorentzVector) -> Result<()> {
    if on_desitter(x) {
        Ok(())
    } else {
        Err(Error::NotOnManifold)
    }
}

fn require_complex_ds(z: &ComplexLorentzVector) -> Result<()> {
    if on_complex_desitter(z) {
        Ok(())
    } else {
        Err(Error::NotOnManifold)
    }
}

const RAY_TOL: f64 = 1e-12;

/// `w ∈ (−∞, −1]` up to `1e-12` in the imaginary part and the threshold.
pub fn on_negative_ray(w: C64) -> bool {
    w.im.abs() <= RAY_TOL && w.re <= -1.0 + RAY_TOL
}

/// Cut domain membership: `−i z₀ ∉ (−∞, −1]`.
pub fn in_cut_domain(z: &ComplexLorentzVector) -> Result<bool> {
    require_complex_ds(z)?;
    Ok(!on_negative_ray(-C64::i() * z.coords[0]))
}

/// Pair cut domain membership: `β(z, w̄) ∉ (−∞, −1]`.
pub fn pair_in_cut(z: &ComplexLorentzVector, w: &ComplexLorentzVector) -> Result<bool> {
    require_complex_ds(z)?;
    require_complex_ds(w)?;
    Ok(!on_negative_ray(beta_sesq(z, w)?))
}

/// Causal relation of an ordered pair `(x, y)` of points of `dSᵈ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    /// `β(x, y) > −1`.
    Spacelike,
    /// `y ∈ I⁺(x)`.
    Future,
    /// `y ∈ I⁻(x)`.
    Past,
    /// `β(x, y) = −1` within tolerance.
    LightlikeBoundary,
}

impl CausalClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CausalClass::Spacelike => "spacelike",
            CausalClass::Future => "future",
            CausalClass::Past => "past",
            CausalClass::LightlikeBoundary => "lightlike_boundary",
        }
    }
}

/// Classifies `y` relative to `x`.
pub fn causal_classify(x: &LorentzVector, y: &LorentzVector) -> Result<CausalClass> {
    same_dim(x.d(), y.d())?;
    require_ds(x)?;
    require_ds(y)?;
    let b = beta(x, y)?;
    let tol = 1e-10 * (1.0 + (x.norm_sq() * y.norm_sq()).sqrt());
    Ok(if (b + 1.0).abs() <= tol {
        CausalClass::LightlikeBoundary
    } else if b > -1.0 {
        CausalClass::Spacelike
    } else if y.coords[0] > x.coords[0] {
        CausalClass::Future
    } else {
        CausalClass::Past
    })
}

/// Exact classification for rational coordinates.
pub fn causal_classify_exact(x: &[BigRational], y: &[BigRational]) -> Result<CausalClass> {
    same_dim(x.len(), y.len())?;
    if x.len() < 2 {
        return Err(Error::DimensionMismatch(x.len(), 2));
    }
    let minus_one = -BigRational::one();
    let rform = |a: &[BigRational], b: &[BigRational]| {
        let mut acc = &a[0] * &b[0];
        for k in 1..a.len() {
            acc -= &a[k] * &b[k];
        }
        acc
    };
    if rform(x, x) != minus_one || rform(y, y) != minus_one {
        return Err(Error::NotOnManifold);
    }
    let b = rform(x, y);
    Ok(if b == minus_one {
        CausalClass::LightlikeBoundary
    } else if b > minus_one {
        CausalClass::Spacelike
    } else if (&y[0] - &x[0]).is_positive() {
        CausalClass::Future
    } else {
        CausalClass::Past
    })
}

/// Rational point from integer numerator/denominator pairs.
pub fn rational_point(pairs: &[(i64, i64)]) -> Vec<BigRational> {
    pairs
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// `x ∈ W⁺ = {x₁ > |x₀|}` for `Sign::Plus`, `−x ∈ W⁺` for `Sign::Minus`.
pub fn in_wedge(x: &LorentzVector, sign: Sign) -> Result<bool> {
    require_ds(x)?;
    let s = sign.value();
    Ok(s * x.coords[1] > x.coords[0].abs())
}

/// `exp(ζh)`: `(z₀, z₁) ↦ (cosh ζ z₀ + sinh ζ z₁, sinh ζ z₀ + cosh ζ z₁)`.
pub fn boost(z: &ComplexLorentzVector, zeta: C64) -> ComplexLorentzVector {
    let (c, s) = (zeta.cosh(), zeta.sinh());
    let mut coords = z.coords.clone();
    coords[0] = c * z.coords[0] + s * z.coords[1];
    coords[1] = s * z.coords[0] + c * z.coords[1];
    ComplexLorentzVector { coords }
}

/// Real boost `a_t = exp(th)`.
pub fn boost_real(x: &LorentzVector, t: f64) -> LorentzVector {
    let (c, s) = (t.cosh(), t.sinh());
    let mut coords = x.coords.clone();
    coords[0] = c * x.coords[0] + s * x.coords[1];
    coords[1] = s * x.coords[0] + c * x.coords[1];
    LorentzVector { coords }
}

/// Matrix of `exp(ζh)` on `ℂ^{1+d}`.
pub fn boost_matrix_complex(d: usize, zeta: C64) -> DMatrix<C64> {
    let mut m = DMatrix::<C64>::identity(d + 1, d + 1);
    let (c, s) = (zeta.cosh(), zeta.sinh());
    m[(0, 0)] = c;
    m[(0, 1)] = s;
    m[(1, 0)] = s;
    m[(1, 1)] = c;
    m
}

/// Matrix of `a_t = exp(th)`.
pub fn boost_matrix(d: usize, t: f64) -> DMatrix<f64> {
    boost_matrix_complex(d, C64::new(t, 0.0)).map(|z| z.re)
}

/// `τ_h = diag(−1, −1, 1, …, 1)`.
pub fn tau_h(d: usize) -> DMatrix<f64> {
    let mut m = DMatrix::<f64>::identity(d + 1, d + 1);
    m[(0, 0)] = -1.0;
    m[(1, 1)] = -1.0;
    m
}

/// `κ_h = exp(−πi h/2)`, mapping `i e₀` to `e₁`.
pub fn kappa_h(d: usize) -> DMatrix<C64> {
    let mut m = boost_matrix_complex(d, C64::new(0.0, -std::f64::consts::FRAC_PI_2));
    // cosh(−iπ/2) = 0 exactly
    m[(0, 0)] = C64::new(0.0, 0.0);
    m[(1, 1)] = C64::new(0.0, 0.0);
    m
}

/// Crown membership: `±Im z₀ > 0` and `(Im z₀)² > Σ_k (Im z_k)²`.
pub fn in_crown(z: &ComplexLorentzVector, sign: Sign) -> Result<bool> {
    require_complex_ds(z)?;
    let y0 = z.coords[0].im;
    let rest: f64 = z.coords[1..].iter().map(|w| w.im * w.im).sum();
    Ok(sign.value() * y0 > 0.0 && y0 * y0 > rest)
}

/// Minkowski metric `η = diag(1, −1, …, −1)`.
pub fn minkowski_metric(d: usize) -> DMatrix<f64> {
    let mut m = -DMatrix::<f64>::identity(d + 1, d + 1);
    m[(0, 0)] = 1.0;
    m
}

/// `g⁻¹ = η gᵀ η` for `g ∈ O(1,d)`.
pub fn lorentz_inverse(g: &DMatrix<f64>) -> DMatrix<f64> {
    let eta = minkowski_metric(g.nrows() - 1);
    &eta * g.transpose() * &eta
}

/// `gᵀηg = η` and `det g = 1` within `tol · max(1, ‖g‖²)`.
pub fn is_special_lorentz(g: &DMatrix<f64>, tol: f64) -> bool {
    let n = g.nrows();
    if n < 2 || g.ncols() != n {
        return false;
    }
    let eta = minkowski_metric(n - 1);
    let scale = g.norm_squared().max(1.0);
    let res = (g.transpose() * &eta * g - &eta).abs().max();
    res <= tol * scale && (g.determinant() - 1.0).abs() <= tol * scale.powi(n as i32)
}

/// Applies a real matrix to a vector.
pub fn apply(g: &DMatrix<f64>, x: &LorentzVector) -> Result<LorentzVector> {
    same_dim(g.ncols(), x.coords.len())?;
    Ok(LorentzVector {
        coords: (g * x.to_dvector()).iter().copied().collect(),
    })
}

/// Applies a complex matrix to a vector.
pub fn apply_complex(g: &DMatrix<C64>, z: &ComplexLorentzVector) -> Result<ComplexLorentzVector> {
    same_dim(g.ncols(), z.coords.len())?;
    let v = DVector::from_column_slice(&z.coords);
    Ok(ComplexLorentzVector {
        coords: (g * v).iter().copied().collect(),
    })
}

/// Spatial rotation (acting on coordinates `1..=d`) taking the unit vector
/// `n` to `e₁`, built from two Householder reflections.
fn rotation_to_e1(n: &[f64]) -> DMatrix<f64> {
    let d = n.len();
    let mut g = DMatrix::<f64>::identity(d + 1, d + 1);
    if d == 1 {
        return g;
    }
    let mut v = DVector::from_column_slice(n);
    // n₁ ≥ 0: reflect n to −e₁, then flip e₁; otherwise reflect n to e₁ and
    // flip e₂. Both choices keep |v| bounded away from zero.
    let flip = if n[0] >= 0.0 {
        v[0] += 1.0;
        0
    } else {
        v[0] -= 1.0;
        1
    };
    let vv = v.norm_squared();
    let mut h = DMatrix::<f64>::identity(d, d) - (&v * v.transpose()) * (2.0 / vv);
    h.row_mut(flip).neg_mut();
    g.view_mut((1, 1), (d, d)).copy_from(&h);
    g
}

/// Boost of rapidity `rho` in the plane of `e₀` and the spatial unit vector
/// `u` (coordinates `1..=d`): `q₀ ↦ cosh ρ q₀ − sinh ρ (u·𝐪)`.
fn plane_boost(u: &[f64], rho: f64) -> DMatrix<f64> {
    let d = u.len();
    let mut e = DVector::<f64>::zeros(d + 1);
    e[0] = 1.0;
    let mut uu = DVector::<f64>::zeros(d + 1);
    for k in 0..d {
        uu[k + 1] = u[k];
    }
    let (c, s) = (rho.cosh(), rho.sinh());
    DMatrix::<f64>::identity(d + 1, d + 1) + (&e * e.transpose() + &uu * uu.transpose()) * (c - 1.0)
        - (&e * uu.transpose() + &uu * e.transpose()) * s
}

/// Rotation by `theta` in the plane of the spatial unit vectors `e₁` and `u`
/// (`u ⟂ e₁`): `e₁ ↦ cos θ e₁ + sin θ u`.
fn plane_rotation(u: &[f64], theta: f64) -> DMatrix<f64> {
    let d = u.len();
    let mut e = DVector::<f64>::zeros(d + 1);
    e[1] = 1.0;
    let mut uu = DVector::<f64>::zeros(d + 1);
    for k in 0..d {
        uu[k + 1] = u[k];
    }
    let (c, s) = (theta.cos(), theta.sin());
    DMatrix::<f64>::identity(d + 1, d + 1)
        + (&e * e.transpose() + &uu * uu.transpose()) * (c - 1.0)
        + (&uu * e.transpose() - &e * uu.transpose()) * s
}

/// Checks `g x ∈ W⁺` and `g y ∈ −W⁺`.
pub fn separates(g: &DMatrix<f64>, x: &LorentzVector, y: &LorentzVector) -> Result<bool> {
    let gx = apply(g, x)?;
    let gy = apply(g, y)?;
    Ok(gx.coords[1] > gx.coords[0].abs() && -gy.coords[1] > gy.coords[0].abs())
}

/// A Lorentz transformation `g` with `g x ∈ W⁺` and `g y ∈ −W⁺` for a
/// spacelike pair.
///
/// For `d ≥ 2` the result lies in `SO(1,d)↑`. First `x` is moved to `e₁` by a
/// rotation followed by a boost. If the image `q` of `y` has `|q₁| < 1`, a
/// boost in the stabiliser of `e₁` moves `q` onto the sphere `x₀ = 0` and a
/// rotation places `e₁` and `q` in opposite half spheres. If `q₁ ≤ −1`, a
/// stabiliser boost balancing the light-cone components of `(q₀, 𝐪_⊥)`
/// brings `|q₀|` below `−q₁`.
///
/// For `d = 1` the two points lie on opposite branches of the hyperbola and
/// `SO(1,1)↑` preserves each branch, so when `x₁ < 0` the witness contains the
/// factor `τ_h = −1`; it is then in `SO(1,1)` but not orthochronous.
pub fn wedge_separating_isometry(x: &LorentzVector, y: &LorentzVector) -> Result<DMatrix<f64>> {
    if causal_classify(x, y)? != CausalClass::Spacelike {
        return Err(Error::NotSpacelike);
    }
    let d = x.d();
    let xc = &x.coords;
    let g = if d == 1 {
        let (pre, x0) = if xc[1] > 0.0 {
            (DMatrix::identity(2, 2), xc[0])
        } else {
            (tau_h(1), -xc[0])
        };
        boost_matrix(1, -x0.asinh()) * pre
    } else {
        let spatial: f64 = xc[1..].iter().map(|v| v * v).sum::<f64>().sqrt();
        let n: Vec<f64> = xc[1..].iter().map(|v| v / spatial).collect();
        let g1 = boost_matrix(d, -xc[0].asinh()) * rotation_to_e1(&n);
        let q = apply(&g1, y)?.coords;
        let (q0, q1) = (q[0], q[1]);
        let r = q[2..].iter().map(|v| v * v).sum::<f64>().sqrt();
        if r == 0.0 {
            g1
        } else {
            let u: Vec<f64> = std::iter::once(0.0).chain(q[2..].iter().map(|v| v / r)).collect();
            // light-cone components A = (q₀+r)/2, B = (q₀−r)/2 with AB = (q₁²−1)/4
            let kappa = (q1 - 1.0) * (q1 + 1.0);
            let (mut a, mut b) = ((q0 + r) / 2.0, (q0 - r) / 2.0);
            if a.abs() < b.abs() {
                a = kappa / (4.0 * b);
            } else {
                b = kappa / (4.0 * a);
            }
            if q1.abs() < 1.0 {
                let rho = 0.5 * (-a / b).ln();
                let g2 = plane_boost(&u, rho) * &g1;
                let q2 = apply(&g2, y)?.coords;
                let r2 = q2[2..].iter().map(|v| v * v).sum::<f64>().sqrt();
                if r2 == 0.0 {
                    g2
                } else {
                    let u2: Vec<f64> = std::iter::once(0.0).chain(q2[2..].iter().map(|v| v / r2)).collect();
                    let phi = q2[1].clamp(-1.0, 1.0).acos();
                    plane_rotation(&u2, 0.5 * (std::f64::consts::PI - phi)) * g2
                }
            } else {
                let target = -q1;
                let rho = if a != 0.0 && b != 0.0 {
                    0.5 * (a.abs() / b.abs()).ln()
                } else if b == 0.0 {
                    (2.0 * a.abs() / target).ln().max(0.0)
                } else {
                    (target / (2.0 * b.abs())).ln().min(0.0)
                };
                plane_boost(&u, rho) * g1
            }
        }
    };
    if !separates(&g, x, y)? {
        return Err(Error::DomainError("wedge construction lost precision"));
    }
    Ok(g)
}

/// `cosh z`.
pub fn cosh_strip(z: C64) -> C64 {
    z.cosh()
}

/// Inverse of `cosh` from `ℂ∖((−∞,−1] ∪ [1,∞))` onto the strip `0 < Im z < π`.
pub fn cosh_strip_inverse(w: C64) -> Result<C64> {
    if w.im == 0.0 && w.re.abs() >= 1.0 {
        return Err(Error::OnCut);
    }
    let z = w.acosh();
    let z = if z.im > 0.0 { z } else { -z };
    if z.im <= 0.0 || z.im >= std::f64::consts::PI {
        return Err(Error::OnCut);
    }
    Ok(z)
}
