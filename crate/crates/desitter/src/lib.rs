//! Harmonic analysis on de Sitter space.
//!
//! The crate is organised bottom-up: [`hypergeom`] provides Γ, ψ and the Gauss
//! function on the slit plane together with its boundary values on the cut,
//! [`lorentz_geometry`] the causal geometry of `dSᵈ` and its complexification,
//! [`spherical`] the scalar spherical functions and their jumps across the cut,
//! [`sl2c_matrix_spherical`] the matrix valued spherical functions of
//! `SL₂(ℂ)` and [`modular_d1`] the one dimensional spectral model.

pub mod error;
pub mod hypergeom;
pub mod lorentz_geometry;
pub mod modular_d1;
pub mod sl2c_matrix_spherical;
pub mod spherical;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
