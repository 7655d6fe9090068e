//! Matrix valued spherical functions `φ^ℓ_{μ,λ}` of `SL₂(ℂ)` on the K-type
//! `π_ℓ`, diagonal in the weight basis `v_0, …, v_ℓ` along `exp(th)`.
//!
//! The diagonal entries are
//! `φ^{ℓ,i}(t) = e^{(ℓ/2−i)t} Σ_j u_{ij} a_j (2 sinh t)^j
//! ₂F₁((λ−μ+2)/2 + j, (μ−λ+2)/2 + j; j + 3/2; (1 − cosh t)/2)`
//! with `u_{ij} = ₃F₂(−j, −i, j+1; 1, −ℓ; 1)` and `a_j` read off from the
//! eigenvector of `U⁻¹LU` belonging to the eigenvalue
//! `ν = μ(λ−μ−2) − (ℓ−μ)(ℓ+μ+2)`.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::hypergeom::{hyp2f1, hyp3f2_terminating_exact, pochhammer, pochhammer_rational, HypergeomParams};
use crate::{Error, Result, C64};

/// Largest `ℓ` accepted by default.
pub const DEFAULT_ELL_CAP: u32 = 32;

/// Largest `ℓ` for which `U⁻¹` is computed exactly.
pub const EXACT_INVERSE_MAX_ELL: u32 = 20;

/// `(ℓ, μ, λ)` with `|μ| ≤ ℓ`, `μ ≡ ℓ (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixSphericalSpec {
    pub ell: u32,
    pub mu: i64,
    pub lambda: C64,
}

impl MatrixSphericalSpec {
    pub fn new(ell: u32, mu: i64, lambda: impl Into<C64>) -> Result<Self> {
        Self::with_cap(ell, mu, lambda, DEFAULT_ELL_CAP)
    }

    pub fn with_cap(ell: u32, mu: i64, lambda: impl Into<C64>, cap: u32) -> Result<Self> {
        if ell > cap {
            return Err(Error::ParameterDomain("ell exceeds the configured cap"));
        }
        if mu.unsigned_abs() > ell as u64 || (ell as i64 - mu).rem_euclid(2) != 0 {
            return Err(Error::ParameterDomain("mu must lie in {-ell, -ell+2, ..., ell}"));
        }
        Ok(Self {
            ell,
            mu,
            lambda: lambda.into(),
        })
    }

    /// `(ℓ, −μ, −λ)`, which has the same spherical function.
    pub fn flipped(&self) -> Self {
        Self {
            ell: self.ell,
            mu: -self.mu,
            lambda: -self.lambda,
        }
    }

    /// `Re(λ − μ) ≥ 0`.
    pub fn is_canonical(&self) -> bool {
        self.lambda.re - self.mu as f64 >= 0.0
    }

    /// The representative with `Re(λ − μ) ≥ 0`.
    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            *self
        } else {
            self.flipped()
        }
    }

    /// `ν = μ(λ−μ−2) − (ℓ−μ)(ℓ+μ+2)`, the diagonal entry of `L` at index
    /// `(ℓ−μ)/2`.
    pub fn eigenvalue(&self) -> C64 {
        let (l, m) = (self.ell as f64, self.mu as f64);
        m * (self.lambda - m - 2.0) - (l - m) * (l + m + 2.0)
    }

    fn pivot(&self) -> usize {
        ((self.ell as i64 - self.mu) / 2) as usize
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `U` in exact arithmetic.
pub fn u_matrix_exact(ell: u32) -> Result<Vec<Vec<BigRational>>> {
    let n = ell as i64;
    (0..=n)
        .map(|i| (0..=n).map(|j| hyp3f2_terminating_exact(j, i, n)).collect())
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn invert_exact(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularU)?;
        a.swap(col, piv);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn to_matrix(m: &[Vec<BigRational>]) -> DMatrix<f64> {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| to_f64(&m[i][j]))
}

/// `U = (u_{ij})` as a floating point matrix; checks invertibility.
pub fn u_matrix(ell: u32) -> Result<DMatrix<f64>> {
    let u = to_matrix(&u_matrix_exact(ell)?);
    let sv = u.singular_values();
    let (mx, mn) = (sv.max(), sv.min());
    if !(mn > 0.0) || mx / mn > 1e12 {
        return Err(Error::SingularU);
    }
    Ok(u)
}

/// `U⁻¹`, exact for `ℓ ≤ 20` and by LU otherwise.
pub fn u_inverse(ell: u32) -> Result<DMatrix<f64>> {
    if ell <= EXACT_INVERSE_MAX_ELL {
        return Ok(to_matrix(&invert_exact(&u_matrix_exact(ell)?)?));
    }
    u_matrix(ell)?.try_inverse().ok_or(Error::SingularU)
}

fn l_diag(spec: &MatrixSphericalSpec, i: usize) -> C64 {
    let l = spec.ell as f64;
    let fi = i as f64;
    (l - 2.0 * fi) * (spec.lambda - spec.mu as f64 - 2.0) - 4.0 * fi * (l - fi + 1.0)
}

fn l_sub(ell: u32, i: usize) -> f64 {
    4.0 * i as f64 * (ell as f64 - i as f64 + 1.0)
}

/// `L = Σ 4i(ℓ−i+1) E_{i,i−1} + [(ℓ−2i)(λ−μ−2) − 4i(ℓ−i+1)] E_{i,i}`.
pub fn l_matrix(spec: &MatrixSphericalSpec) -> DMatrix<C64> {
    let n = spec.ell as usize + 1;
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            l_diag(spec, i)
        } else if j + 1 == i {
            C64::new(l_sub(spec.ell, i), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Nullvector of `L − νI` with polynomial entries: zero below the pivot
/// `k = (ℓ−μ)/2`, and `∏_{m=k+1}^{i} 4m(ℓ−m+1) ∏_{m=i+1}^{ℓ} (ν − L_{mm})`
/// from `k` on.
fn nullvector<T, D, S>(ell: u32, k: usize, nu: &T, diag: D, sub: S) -> Vec<T>
where
    T: Clone + Zero + One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
    D: Fn(usize) -> T,
    S: Fn(usize) -> T,
{
    let n = ell as usize;
    (0..=n)
        .map(|i| {
            if i < k {
                return T::zero();
            }
            let mut v = T::one();
            for m in k + 1..=i {
                v = v * sub(m);
            }
            for m in i + 1..=n {
                v = v * (nu.clone() - diag(m));
            }
            v
        })
        .collect()
}

/// `a_0, …, a_ℓ` with `a_0 = 1`, computed for the canonical representative.
pub fn eigen_coefficients(spec: &MatrixSphericalSpec) -> Result<Vec<C64>> {
    eigen_coefficients_oriented(&spec.canonical())
}

/// `a_0, …, a_ℓ` for `spec` in its given orientation, without the `(μ, λ) ↦ (−μ, −λ)`
/// normalization. Fails with `DegenerateEigenvector` where `α_0` vanishes.
pub fn eigen_coefficients_oriented(spec: &MatrixSphericalSpec) -> Result<Vec<C64>> {
    let spec = *spec;
    let nu = spec.eigenvalue();
    let w = nullvector(
        spec.ell,
        spec.pivot(),
        &nu,
        |m| l_diag(&spec, m),
        |m| C64::new(l_sub(spec.ell, m), 0.0),
    );
    let uinv = u_inverse(spec.ell)?.map(|x| C64::new(x, 0.0));
    let alpha = uinv * nalgebra::DVector::from_vec(w);
    let scale = alpha.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if !(alpha[0].norm() > 1e-12 * scale) {
        return Err(Error::DegenerateEigenvector);
    }
    let x = (spec.lambda - spec.mu as f64 + 2.0) / 2.0;
    Ok((0..alpha.len())
        .map(|j| {
            let jj = j as u32;
            alpha[j] / alpha[0] * pochhammer(x, jj) / pochhammer(C64::new(j as f64 + 1.0, 0.0), jj + 1)
        })
        .collect())
}

/// [`eigen_coefficients`] in exact arithmetic for rational `λ`.
pub fn eigen_coefficients_exact(ell: u32, mu: i64, lambda: &BigRational) -> Result<Vec<BigRational>> {
    MatrixSphericalSpec::new(ell, mu, 0.0)?;
    let (mu, lambda) = if lambda - int(mu) < BigRational::zero() {
        (-mu, -lambda.clone())
    } else {
        (mu, lambda.clone())
    };
    let (l, m) = (int(ell as i64), int(mu));
    let two = int(2);
    let nu = &m * (&lambda - &m - &two) - (&l - &m) * (&l + &m + &two);
    let diag = |i: usize| {
        let fi = int(i as i64);
        (&l - &two * &fi) * (&lambda - &m - &two) - int(4) * &fi * (&l - &fi + BigRational::one())
    };
    let sub = |i: usize| int(4 * i as i64 * (ell as i64 - i as i64 + 1));
    let k = ((ell as i64 - mu) / 2) as usize;
    let w = nullvector(ell, k, &nu, diag, sub);
    let uinv = invert_exact(&u_matrix_exact(ell)?)?;
    let alpha: Vec<BigRational> = uinv
        .iter()
        .map(|row| row.iter().zip(&w).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
        .collect();
    if alpha[0].is_zero() {
        return Err(Error::DegenerateEigenvector);
    }
    let x = (&lambda - &m + &two) / &two;
    Ok((0..alpha.len())
        .map(|j| {
            let jj = j as u32;
            &alpha[j] / &alpha[0] * pochhammer_rational(&x, jj) / pochhammer_rational(&int(j as i64 + 1), jj + 1)
        })
        .collect())
}

/// Relative residual of `(U⁻¹LU) α = ν α` for the eigenvector `α` behind
/// [`eigen_coefficients`].
pub fn eigen_residual(spec: &MatrixSphericalSpec) -> Result<f64> {
    let spec = spec.canonical();
    let a = eigen_coefficients(&spec)?;
    let x = (spec.lambda - spec.mu as f64 + 2.0) / 2.0;
    let alpha = nalgebra::DVector::from_iterator(
        a.len(),
        a.iter().enumerate().map(|(j, aj)| {
            let jj = j as u32;
            aj * pochhammer(C64::new(j as f64 + 1.0, 0.0), jj + 1) / pochhammer(x, jj)
        }),
    );
    let u = u_matrix(spec.ell)?.map(|v| C64::new(v, 0.0));
    let uinv = u_inverse(spec.ell)?.map(|v| C64::new(v, 0.0));
    let m = uinv * l_matrix(&spec) * u;
    let r = &m * &alpha - &alpha * spec.eigenvalue();
    Ok(r.norm() / ((&m * &alpha).norm() + alpha.norm() * spec.eigenvalue().norm()).max(1e-300))
}

/// Diagonal entries `φ^{ℓ,0}(t), …, φ^{ℓ,ℓ}(t)`.
pub fn matrix_spherical(spec: &MatrixSphericalSpec, t: f64) -> Result<Vec<C64>> {
    matrix_spherical_oriented(&spec.canonical(), t)
}

/// [`matrix_spherical`] evaluated in the orientation given.
pub fn matrix_spherical_oriented(spec: &MatrixSphericalSpec, t: f64) -> Result<Vec<C64>> {
    let spec = *spec;
    let a = eigen_coefficients_oriented(&spec)?;
    let u = u_matrix(spec.ell)?;
    let x = C64::new((1.0 - t.cosh()) / 2.0, 0.0);
    let s = 2.0 * t.sinh();
    let lm = spec.lambda - spec.mu as f64;
    let terms: Vec<C64> = (0..a.len())
        .map(|j| {
            let jf = j as f64;
            let h = HypergeomParams::new((lm + 2.0) / 2.0 + jf, (2.0 - lm) / 2.0 + jf, jf + 1.5);
            Ok(a[j] * s.powi(j as i32) * hyp2f1(&h, x)?)
        })
        .collect::<Result<_>>()?;
    let l = spec.ell as f64;
    Ok((0..a.len())
        .map(|i| {
            let sum: C64 = terms.iter().enumerate().map(|(j, tj)| u[(i, j)] * tj).sum();
            ((l / 2.0 - i as f64) * t).exp() * sum
        })
        .collect())
}

/// The unitarizable family containing `φ^ℓ_{μ,λ}` when it is positive
/// definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositivityLabel {
    UnitaryPrincipal,
    Complementary,
    Trivial,
    RelativeDiscrete,
}

impl PositivityLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PositivityLabel::UnitaryPrincipal => "unitary_principal",
            PositivityLabel::Complementary => "complementary",
            PositivityLabel::Trivial => "trivial",
            PositivityLabel::RelativeDiscrete => "relative_discrete",
        }
    }
}

/// Positive definiteness of `φ^ℓ_{μ,λ}` with the family it comes from.
pub fn is_positive_definite(spec: &MatrixSphericalSpec) -> (bool, Option<PositivityLabel>) {
    let l = spec.lambda;
    let label = if l.re == 0.0 {
        Some(PositivityLabel::UnitaryPrincipal)
    } else if spec.mu != 0 || l.im != 0.0 {
        None
    } else if l.re.abs() < 2.0 {
        Some(PositivityLabel::Complementary)
    } else if l.re.abs() == 2.0 && spec.ell == 0 {
        Some(PositivityLabel::Trivial)
    } else if spec.ell % 2 == 0 && l.re.fract() == 0.0 && (l.re.abs() as i64) % 2 == 0 && l.re.abs() <= spec.ell as f64
    {
        Some(PositivityLabel::RelativeDiscrete)
    } else {
        None
    };
    (label.is_some(), label)
}

/// Generators of `sl₂(ℂ)` acting on `π_ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    H,
    E,
    F,
}

/// `X v_i = c v_j`: `H v_i = (ℓ−2i) v_i`, `E v_i = (ℓ−i+1) v_{i−1}`,
/// `F v_i = (i+1) v_{i+1}`, with `v_{−1} = v_{ℓ+1} = 0` (target index
/// `−1` or `ℓ+1`).
pub fn pi_ell_action(ell: u32, generator: Generator, i: i64) -> Result<(i64, i64)> {
    let l = ell as i64;
    if !(0..=l).contains(&i) {
        return Err(Error::IndexOutOfRange(i));
    }
    Ok(match generator {
        Generator::H => (l - 2 * i, i),
        Generator::E => (l - i + 1, i - 1),
        Generator::F => (i + 1, i + 1),
    })
}

/// Matrix of `X` on `π_ℓ` in the basis `v_0, …, v_ℓ`.
pub fn pi_ell_matrix(ell: u32, generator: Generator) -> DMatrix<f64> {
    let n = ell as usize + 1;
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        let (c, j) = pi_ell_action(ell, generator, i as i64).expect("index in range");
        if (0..n as i64).contains(&j) {
            m[(j as usize, i)] = c as f64;
        }
    }
    m
}
