use desitter::sl2c_matrix_spherical::{
    eigen_coefficients, eigen_coefficients_exact, eigen_coefficients_oriented, eigen_residual, invert_exact,
    is_positive_definite, l_matrix, matrix_spherical, matrix_spherical_oriented, pi_ell_action, pi_ell_matrix,
    u_inverse, u_matrix, u_matrix_exact, Generator, MatrixSphericalSpec, PositivityLabel,
};
use desitter::spherical::{spherical_phi, SphericalParams};
use desitter::{Error, C64};
use desitter_oracles::su2::matrix_spherical_oracle;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn max_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn agrees_with_su2_average() {
    let cases = [
        (0u32, 0i64, c(0.4, 0.9)),
        (1, -1, c(0.7, 0.3)),
        (1, 1, c(2.3, 0.0)),
        (2, 0, c(0.0, 1.1)),
        (2, 2, c(0.3, 0.0)),
        (3, 1, c(1.5, 0.4)),
        (3, -3, c(0.0, -0.6)),
        (4, -2, c(-0.5, 0.2)),
        (5, 1, c(0.9, 0.8)),
    ];
    for (ell, mu, lam) in cases {
        let spec = MatrixSphericalSpec::new(ell, mu, lam).unwrap();
        for t in [0.4, -1.1, 1.8] {
            let a = matrix_spherical(&spec, t).unwrap();
            let b = matrix_spherical_oracle(ell as usize, mu, lam, t, 48);
            let scale = b.iter().map(|v| v.norm()).fold(1.0, f64::max);
            assert!(max_diff(&a, &b) < 1e-10 * scale, "ell={ell} mu={mu} lambda={lam} t={t}");
        }
    }
}

#[test]
fn trivial_k_type_is_scalar_spherical_function() {
    // ℓ = 0 reduces to φ_{λ/2} on H³
    for lam in [c(0.3, 0.0), c(0.0, 2.1), c(1.4, -0.7)] {
        let spec = MatrixSphericalSpec::new(0, 0, lam).unwrap();
        let p = SphericalParams::new(3, lam / 2.0);
        for t in [0.2, 1.3, 3.0] {
            let a = matrix_spherical(&spec, t).unwrap()[0];
            let b = spherical_phi(&p, c(t, 0.0)).unwrap();
            assert!((a - b).norm() < 1e-12 * b.norm().max(1.0));
        }
    }
}

#[test]
fn identity_at_origin() {
    for (ell, mu, lam) in [(2u32, 0i64, c(0.5, 0.5)), (3, -1, c(1.0, 0.0)), (6, 4, c(0.0, 0.3))] {
        let spec = MatrixSphericalSpec::new(ell, mu, lam).unwrap();
        for v in matrix_spherical(&spec, 0.0).unwrap() {
            assert!((v - 1.0).norm() < 1e-13);
        }
    }
}

#[test]
fn first_coefficient_for_ell_one() {
    for lam in [q(1, 3), q(-1, 2), q(7, 4), q(0, 1)] {
        let a = eigen_coefficients_exact(1, -1, &lam).unwrap();
        assert!(a[0].is_one());
        assert_eq!(a[1], -(q(3, 1) + &lam) / q(12, 1));
    }
    for lam in [q(1, 3), q(-1, 2), q(0, 1)] {
        let a = eigen_coefficients_exact(1, 1, &lam).unwrap();
        assert_eq!(a[1], -(q(3, 1) - &lam) / q(12, 1));
    }
    let a = eigen_coefficients(&MatrixSphericalSpec::new(1, -1, c(0.25, 0.5)).unwrap()).unwrap();
    assert!((a[1] + (c(3.25, 0.5)) / 12.0).norm() < 1e-15);
}

#[test]
fn float_coefficients_match_exact() {
    for (ell, mu, num, den) in [(2u32, 0i64, 1i64, 3i64), (3, 1, 5, 2), (4, -2, -1, 4), (6, 2, 7, 3)] {
        let exact = eigen_coefficients_exact(ell, mu, &q(num, den)).unwrap();
        let float = eigen_coefficients(&MatrixSphericalSpec::new(ell, mu, num as f64 / den as f64).unwrap()).unwrap();
        for (e, f) in exact.iter().zip(&float) {
            let e = num_traits::ToPrimitive::to_f64(e).unwrap();
            assert!((f - e).norm() < 1e-12 * e.abs().max(1.0), "ell={ell} mu={mu}");
        }
    }
}

#[test]
fn eigen_residuals_are_small() {
    for ell in 0..=12u32 {
        for mu in (-(ell as i64)..=ell as i64).step_by(2) {
            let spec = MatrixSphericalSpec::new(ell, mu, c(0.37, 1.21)).unwrap();
            assert!(eigen_residual(&spec).unwrap() < 1e-10, "ell={ell} mu={mu}");
        }
    }
}

#[test]
fn u_matrix_inverse_is_exact() {
    for ell in 0..=8u32 {
        let u = u_matrix_exact(ell).unwrap();
        let inv = invert_exact(&u).unwrap();
        let n = u.len();
        for i in 0..n {
            for j in 0..n {
                let s = (0..n).fold(BigRational::zero(), |acc, k| acc + &u[i][k] * &inv[k][j]);
                assert_eq!(
                    s,
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                );
            }
        }
        let prod = u_matrix(ell).unwrap() * u_inverse(ell).unwrap();
        assert!((prod - DMatrix::identity(n, n)).norm() < 1e-10);
    }
    // first row and column of U are all ones
    let u = u_matrix_exact(5).unwrap();
    assert!(u[0].iter().all(|x| x.is_one()));
    assert!(u.iter().all(|r| r[0].is_one()));
}

#[test]
fn l_matrix_has_eigenvalue_nu() {
    let spec = MatrixSphericalSpec::new(4, 2, c(0.6, -0.2)).unwrap();
    let l = l_matrix(&spec);
    let k = 1;
    assert!((l[(k, k)] - spec.eigenvalue()).norm() < 1e-14);
    for i in 0..5 {
        for j in 0..5 {
            if j > i || j + 1 < i {
                assert_eq!(l[(i, j)], c(0.0, 0.0));
            }
        }
    }
}

#[test]
fn orientation_symmetry() {
    for (ell, mu, lam) in [
        (3u32, 1i64, c(0.7, 0.3)),
        (4, 2, c(2.3, 0.5)),
        (6, 0, c(-1.2, 1.1)),
        (5, -3, c(0.1, -0.4)),
    ] {
        let spec = MatrixSphericalSpec::new(ell, mu, lam).unwrap();
        let a = matrix_spherical_oriented(&spec, 0.9).unwrap();
        let b = matrix_spherical_oriented(&spec.flipped(), 0.9).unwrap();
        let scale = a.iter().map(|v| v.norm()).fold(1.0, f64::max);
        assert!(max_diff(&a, &b) < 1e-11 * scale, "ell={ell} mu={mu} lambda={lam}");
    }
}

#[test]
fn degenerate_orientation_is_reported() {
    let spec = MatrixSphericalSpec::new(2, 0, 2.0).unwrap();
    assert!(spec.is_canonical());
    assert_eq!(
        eigen_coefficients_oriented(&spec.flipped()),
        Err(Error::DegenerateEigenvector)
    );
    assert!(matrix_spherical(&spec, 0.5).is_ok());
}

#[test]
fn integer_parameters_are_interchangeable() {
    // φ^ℓ_{μ,λ} = φ^ℓ_{λ,μ} when both lie in {−ℓ, −ℓ+2, …, ℓ}
    for ell in 0..=4u32 {
        let l = ell as i64;
        for mu in (-l..=l).step_by(2) {
            for lam in (-l..=l).step_by(2) {
                let a = matrix_spherical(&MatrixSphericalSpec::new(ell, mu, lam as f64).unwrap(), 0.7).unwrap();
                let b = matrix_spherical(&MatrixSphericalSpec::new(ell, lam, mu as f64).unwrap(), 0.7).unwrap();
                assert!(max_diff(&a, &b) < 1e-11, "ell={ell} mu={mu} lambda={lam}");
            }
        }
    }
}

#[test]
fn sl2_relations_on_k_type() {
    for ell in 0..=6u32 {
        let h = pi_ell_matrix(ell, Generator::H);
        let e = pi_ell_matrix(ell, Generator::E);
        let f = pi_ell_matrix(ell, Generator::F);
        assert_eq!(&h * &e - &e * &h, 2.0 * &e);
        assert_eq!(&h * &f - &f * &h, -2.0 * &f);
        assert_eq!(&e * &f - &f * &e, h);
    }
    assert_eq!(pi_ell_action(3, Generator::E, 0).unwrap(), (4, -1));
    assert_eq!(pi_ell_action(3, Generator::F, 3).unwrap(), (4, 4));
    assert_eq!(pi_ell_action(3, Generator::H, 1).unwrap(), (1, 1));
    assert_eq!(pi_ell_action(3, Generator::H, 4), Err(Error::IndexOutOfRange(4)));
}

#[test]
fn positivity_labels() {
    use PositivityLabel::*;
    let label = |ell, mu, lam: C64| is_positive_definite(&MatrixSphericalSpec::new(ell, mu, lam).unwrap()).1;
    assert_eq!(label(2, 2, c(0.0, 1.5)), Some(UnitaryPrincipal));
    assert_eq!(label(2, 0, c(1.2, 0.0)), Some(Complementary));
    assert_eq!(label(0, 0, c(2.0, 0.0)), Some(Trivial));
    assert_eq!(label(4, 0, c(2.0, 0.0)), Some(RelativeDiscrete));
    assert_eq!(label(4, 0, c(-4.0, 0.0)), Some(RelativeDiscrete));
    assert_eq!(label(2, 0, c(4.0, 0.0)), None);
    assert_eq!(label(3, 1, c(0.5, 0.0)), None);
    assert_eq!(label(2, 0, c(0.5, 0.5)), None);
    assert_eq!(label(3, 1, c(3.0, 0.0)), None);
    assert_eq!(RelativeDiscrete.as_str(), "relative_discrete");
}

#[test]
fn invalid_specs() {
    assert!(matches!(
        MatrixSphericalSpec::new(2, 1, 0.0),
        Err(Error::ParameterDomain(_))
    ));
    assert!(matches!(
        MatrixSphericalSpec::new(2, 4, 0.0),
        Err(Error::ParameterDomain(_))
    ));
    assert!(matches!(
        MatrixSphericalSpec::new(40, 0, 0.0),
        Err(Error::ParameterDomain(_))
    ));
    assert!(MatrixSphericalSpec::with_cap(40, 0, 0.0, 40).is_ok());
    assert!(eigen_coefficients_exact(3, 0, &q(1, 2)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn oracle_agreement(ell in 0u32..5, k in 0u32..5, re in -2.0f64..2.0, im in -2.0f64..2.0, t in -2.0f64..2.0) {
        let mu = ell as i64 - 2 * (k % (ell + 1)) as i64;
        let lam = c(re, im);
        let spec = MatrixSphericalSpec::new(ell, mu, lam).unwrap();
        let a = matrix_spherical(&spec, t);
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        let b = matrix_spherical_oracle(ell as usize, mu, lam, t, 40);
        let scale = b.iter().map(|v| v.norm()).fold(1.0, f64::max);
        prop_assert!(max_diff(&a, &b) <= 1e-9 * scale);
    }

    #[test]
    fn even_in_t_up_to_weight_reversal(ell in 0u32..5, k in 0u32..5, re in -2.0f64..2.0, im in -2.0f64..2.0, t in 0.0f64..2.0) {
        // The Weyl element w maps a_t to a_{−t} and v_i to v_{ℓ−i}.
        let mu = ell as i64 - 2 * (k % (ell + 1)) as i64;
        let spec = MatrixSphericalSpec::new(ell, mu, c(re, im)).unwrap();
        let (a, b) = (matrix_spherical(&spec, t), matrix_spherical(&spec, -t));
        prop_assume!(a.is_ok() && b.is_ok());
        let (a, mut b) = (a.unwrap(), b.unwrap());
        b.reverse();
        let scale = a.iter().map(|v| v.norm()).fold(1.0, f64::max);
        prop_assert!(max_diff(&a, &b) <= 1e-10 * scale);
    }
}
