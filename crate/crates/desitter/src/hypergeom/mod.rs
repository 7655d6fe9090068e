//! Gauss hypergeometric function on the slit plane `ℂ∖[1,∞)` and its
//! boundary values on the cut, together with the Γ-family, the terminating
//! ₃F₂ needed for `SL₂(ℂ)` and the associated Legendre functions.
//!
//! All powers and logarithms use the principal branch `arg ∈ (−π, π]`.

mod boundary;
mod dispatch;
mod gamma;
mod legendre;
mod ode;
mod rational;
mod series;
mod transform;

pub use boundary::{gauss_limit_value, hyp2f1_boundary, log_limit_coeff};
pub use dispatch::{hyp2f1, hyp2f1_derivative, hyp2f1_region, Region};
pub use gamma::{digamma, gamma, ln_gamma, nearest_integer, nonpositive_integer, pochhammer, rgamma};
pub use legendre::{legendre_p, legendre_q};
pub use rational::{hyp3f2_terminating, hyp3f2_terminating_exact, pochhammer_rational};
pub use series::hyp2f1_series;
pub use transform::{
    connection_one, euler_transform, inverse_one_minus_z, inverse_z, log_connection_one, one_minus_inverse_z,
    pfaff_transform,
};

use crate::C64;

/// Parameters `(a, b; c)` of `₂F₁(a, b; c; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomParams {
    pub a: C64,
    pub b: C64,
    pub c: C64,
}

impl HypergeomParams {
    pub fn new(a: impl Into<C64>, b: impl Into<C64>, c: impl Into<C64>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// Parameters of the derivative, `(a+1, b+1; c+1)`.
    pub fn shifted(&self) -> Self {
        Self::new(self.a + 1.0, self.b + 1.0, self.c + 1.0)
    }

    /// Degree of the polynomial when `a` or `b` is a nonpositive integer.
    pub fn terminating_degree(&self) -> Option<u64> {
        match (nonpositive_integer(self.a), nonpositive_integer(self.b)) {
            (Some(m), Some(n)) => Some(m.min(n)),
            (Some(m), None) | (None, Some(m)) => Some(m),
            (None, None) => None,
        }
    }

    /// `c ∈ −ℕ₀` and the series does not stop before the vanishing denominator.
    pub fn has_c_pole(&self) -> bool {
        match nonpositive_integer(self.c) {
            None => false,
            Some(m) => self.terminating_degree().is_none_or(|n| n > m),
        }
    }

    /// `c − a − b`.
    pub fn excess(&self) -> C64 {
        self.c - self.a - self.b
    }

    pub fn all_real(&self) -> bool {
        self.a.im == 0.0 && self.b.im == 0.0 && self.c.im == 0.0
    }
}

/// Side of the i0 prescription when approaching the cut `[1,∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutSide {
    /// `t + i0`.
    Above,
    /// `t − i0`.
    Below,
}

impl CutSide {
    /// `+1` above the cut, `−1` below.
    pub fn sign(self) -> f64 {
        match self {
            CutSide::Above => 1.0,
            CutSide::Below => -1.0,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            CutSide::Above => CutSide::Below,
            CutSide::Below => CutSide::Above,
        }
    }
}

/// Principal power `z^μ`, with `−0.0` imaginary parts treated as `+0.0`.
pub fn cpow(z: C64, mu: C64) -> C64 {
    if z == C64::new(0.0, 0.0) {
        return if mu == C64::new(0.0, 0.0) {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        };
    }
    if mu.im == 0.0 && mu.re == mu.re.round() && mu.re.abs() < 64.0 {
        return z.powi(mu.re as i32);
    }
    (mu * clog(z)).exp()
}

/// Principal logarithm with `arg ∈ (−π, π]`.
pub fn clog(z: C64) -> C64 {
    C64::new(z.re, z.im + 0.0).ln()
}
