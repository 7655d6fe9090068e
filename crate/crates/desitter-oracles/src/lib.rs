//! Independent numerical oracles for testing: adaptive Gauss–Kronrod
//! quadrature, polynomial extrapolation of ε-limits, finite differences and a
//! direct quadrature over `SU(2)` for matrix valued spherical functions.
//!
//! Nothing here depends on the library under test.

pub mod diff;
pub mod limits;
pub mod quadrature;
pub mod su2;

pub type C64 = num_complex::Complex64;
