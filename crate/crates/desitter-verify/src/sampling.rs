//! Seeded samplers for de Sitter points, rotations and complex group
//! elements.

use desitter::lorentz_geometry::{boost_matrix_complex, LorentzVector};
use desitter::C64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Cauchy, Distribution, StandardNormal};

pub type VerifyRng = ChaCha8Rng;

pub fn rng(seed: u64) -> VerifyRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar distributed `k ∈ SO(n)` from the QR factorization of a Gaussian
/// matrix.
pub fn random_rotation(rng: &mut VerifyRng, n: usize) -> DMatrix<f64> {
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    let a = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(rng));
    let qr = a.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

/// `(1+n) × (1+n)` matrix acting by `k` on the spatial coordinates.
pub fn spatial(k: &DMatrix<f64>) -> DMatrix<f64> {
    let n = k.nrows();
    let mut g = DMatrix::identity(n + 1, n + 1);
    g.view_mut((1, 1), (n, n)).copy_from(k);
    g
}

/// Rapidity from a Cauchy law clipped to `[−6, 6]`.
pub fn heavy_tailed_rapidity(rng: &mut VerifyRng) -> f64 {
    let c = Cauchy::new(0.0, 1.0).expect("valid scale");
    let t: f64 = c.sample(rng);
    t.clamp(-6.0, 6.0)
}

/// `k·a_t·e₁` with `k ∈ SO(d)` and heavy tailed `t`; for `d = 1` a random
/// branch of the hyperbola.
pub fn random_desitter(rng: &mut VerifyRng, d: usize) -> LorentzVector {
    let t = heavy_tailed_rapidity(rng);
    let mut c = vec![0.0; d + 1];
    c[0] = t.sinh();
    c[1] = t.cosh();
    if d == 1 {
        if rng.random::<bool>() {
            c[1] = -c[1];
        }
        return LorentzVector::new(c).expect("d >= 1");
    }
    let k = random_rotation(rng, d);
    let mut out = vec![c[0]; d + 1];
    for i in 0..d {
        out[i + 1] = k[(i, 0)] * c[1];
    }
    LorentzVector::new(out).expect("d >= 1")
}

/// Product of a few complex boosts along `h` and real rotations, with
/// `|Re ζ|, |Im ζ| ≤ 0.5`.
pub fn random_complex_group(rng: &mut VerifyRng, d: usize) -> DMatrix<C64> {
    let mut g = DMatrix::<C64>::identity(d + 1, d + 1);
    for _ in 0..3 {
        let zeta = C64::new(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5));
        g = boost_matrix_complex(d, zeta) * g;
        if d >= 2 {
            let k = spatial(&random_rotation(rng, d)).map(|x| C64::new(x, 0.0));
            g = k * g;
        }
    }
    g
}

/// `g⁻¹ = η gᵀ η` for a complex Lorentz matrix.
pub fn complex_lorentz_inverse(g: &DMatrix<C64>) -> DMatrix<C64> {
    let n = g.nrows();
    let eta = DMatrix::<C64>::from_fn(n, n, |i, j| {
        if i != j {
            C64::new(0.0, 0.0)
        } else if i == 0 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(-1.0, 0.0)
        }
    });
    &eta * g.transpose() * &eta
}

/// Evenly spaced points `start + (stop−start)(k+½)/n`, `k < n`.
pub fn midpoints(start: f64, stop: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| start + (stop - start) * (k as f64 + 0.5) / n as f64)
        .collect()
}
