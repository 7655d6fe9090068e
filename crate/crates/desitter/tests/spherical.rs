use std::f64::consts::PI;

use desitter::hypergeom::{gamma, CutSide};
use desitter::lorentz_geometry::{boost_matrix, ComplexLorentzVector, LorentzVector, Sign};
use desitter::spherical::{
    boundary_d, boundary_limit_value, boundary_side, c_plus, chi_spherical_d2, decompose_q, gamma_abs_sq_product,
    horospherical_p, huygens_support_on_boundary, jump, jump_constant, jump_from_boundary, jump_future_closed_form,
    kernel_q, lambda_of_mass, limit_const_one, limit_const_two, phi_horospherical, psi_lambda, psi_lambda_series,
    region_tag, spherical_phi, RegionTag, SphericalParams,
};
use desitter::{Error, C64};
use desitter_oracles::diff::{derivative, second_derivative};
use desitter_oracles::limits::{eps_limit, EPS_GRID};
use desitter_oracles::quadrature::{integrate, integrate_to_infinity};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

/// `y = (±sinh r, cosh r, 0, …)`, in `I^±(e₁)` for `r > 0`.
fn cone_point(d: usize, r: f64, future: bool) -> LorentzVector {
    let mut v = vec![0.0; d + 1];
    v[0] = if future { r.sinh() } else { -r.sinh() };
    v[1] = r.cosh();
    LorentzVector::new(v).unwrap()
}

/// `(sinh r, −cosh r, 0, …)`, spacelike to `e₁`.
fn spacelike_point(d: usize, r: f64) -> LorentzVector {
    let mut v = vec![0.0; d + 1];
    v[0] = r.sinh();
    v[1] = -r.cosh();
    LorentzVector::new(v).unwrap()
}

/// `Q_λ(z_ε, y) − Q_λ(z̄_ε, y)` with `z_ε = i sin ε e₀ + cos ε e₁`.
fn eps_jump(p: &SphericalParams, y: &LorentzVector, eps: f64) -> C64 {
    let d = y.d();
    let mut zc = vec![c(0.0, 0.0); d + 1];
    zc[0] = c(0.0, eps.sin());
    zc[1] = c(eps.cos(), 0.0);
    let z = ComplexLorentzVector::new(zc).unwrap();
    let yc = y.to_complex();
    kernel_q(p, &z, &yc).unwrap() - kernel_q(p, &z.conj(), &yc).unwrap()
}

/// `∫₀^π (cosh t − sinh t cos θ)^{λ−ρ} sin^{d−2}θ dθ / ∫₀^π sin^{d−2}θ dθ`.
fn phi_quadrature(p: &SphericalParams, t: f64) -> C64 {
    let rho = p.rho();
    let k = p.d as i32 - 2;
    let num = integrate(
        |th: f64| ((p.lambda - rho) * (t.cosh() - t.sinh() * th.cos()).ln()).exp() * th.sin().powi(k),
        0.0,
        PI,
        1e-15,
        1e-13,
    );
    let den = integrate(|th: f64| c(th.sin().powi(k), 0.0), 0.0, PI, 1e-15, 1e-13);
    num / den
}

/// `∫₀^∞ (cosh t + sinh t cosh s)^{−λ−ρ} sinh^{d−2}s ds`.
fn psi_quadrature(lambda: C64, d: u32, t: f64) -> C64 {
    let rho = (d as f64 - 1.0) / 2.0;
    integrate_to_infinity(
        |s: f64| {
            let base = (t.cosh() + t.sinh() * s.cosh()).ln();
            let w = if d == 2 { 0.0 } else { (d as f64 - 2.0) * s.sinh().ln() };
            (-(lambda + rho) * base + w).exp()
        },
        0.0,
        1e-13,
        1e-15,
    )
}

#[test]
fn phi_closed_forms_in_low_dimension() {
    for lam in [c(0.3, 0.0), c(0.0, 1.7), c(0.8, -0.4)] {
        for t in [0.1, 0.9, 2.5] {
            // d = 1: cosh(λt); d = 3: sinh(λt)/(λ sinh t)
            let p1 = SphericalParams::new(1, lam);
            assert!(rel(spherical_phi(&p1, c(t, 0.0)).unwrap(), (lam * t).cosh()) < 1e-13);
            let p3 = SphericalParams::new(3, lam);
            let expect = (lam * t).sinh() / (lam * t.sinh());
            assert!(rel(spherical_phi(&p3, c(t, 0.0)).unwrap(), expect) < 1e-12);
        }
    }
}

#[test]
fn phi_matches_quadrature_oracle() {
    for d in 2..=5u32 {
        for lam in [c(0.2, 0.0), c(0.0, 1.3), c(1.1, 0.5)] {
            let p = SphericalParams::new(d, lam);
            for t in [0.3, 1.2, 2.7] {
                let v = spherical_phi(&p, c(t, 0.0)).unwrap();
                assert!(rel(v, phi_quadrature(&p, t)) < 1e-10, "d={d} lambda={lam} t={t}");
            }
        }
    }
}

#[test]
fn phi_solves_radial_laplace_equation() {
    // φ'' + (d−1) coth t φ' = (λ² − ρ²) φ
    for d in 2..=6u32 {
        let lam = c(0.4, 0.9);
        let p = SphericalParams::new(d, lam);
        let f = |t: f64| spherical_phi(&p, c(t, 0.0)).unwrap();
        for t in [0.5, 1.5] {
            let lhs = second_derivative(f, t, 1e-3) + (d as f64 - 1.0) / t.tanh() * derivative(f, t, 1e-3);
            let rhs = (lam * lam - p.rho() * p.rho()) * f(t);
            assert!((lhs - rhs).norm() < 1e-7 * rhs.norm().max(1.0), "d={d} t={t}");
        }
    }
}

#[test]
fn phi_at_identity_and_cut() {
    let p = SphericalParams::new(4, c(0.0, 2.0));
    assert_eq!(spherical_phi(&p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    // t = iπ lands on the cut of ₂F₁
    assert_eq!(spherical_phi(&p, c(0.0, PI)), Err(Error::OnCut));
}

#[test]
fn kernel_at_crown_points_is_phi_on_compact_direction() {
    // β(z_s, e₁) = −cos s with z_s = i sin s e₀ + cos s e₁, so Q = φ(i(π−s)).
    let p = SphericalParams::new(3, c(0.0, 0.8));
    let e1 = LorentzVector::basis(3, 1).to_complex();
    for s in [0.2f64, 1.0, 2.0] {
        let z = ComplexLorentzVector::new(vec![c(0.0, s.sin()), c(s.cos(), 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let q = kernel_q(&p, &z, &e1).unwrap();
        let phi = spherical_phi(&p, c(0.0, PI - s)).unwrap();
        assert!(rel(q, phi) < 1e-13);
    }
}

#[test]
fn kernel_rejects_points_on_the_cut() {
    let p = SphericalParams::new(2, c(0.3, 0.0));
    let x = LorentzVector::basis(2, 1).to_complex();
    let y = cone_point(2, 0.7, true).to_complex();
    assert_eq!(kernel_q(&p, &x, &y), Err(Error::OnCut));
}

#[test]
fn chi_reduces_to_phi_for_trivial_character() {
    let p = SphericalParams::new(2, c(0.35, 0.2));
    for t in [0.4, 1.9] {
        let a = chi_spherical_d2(0.0, &p, c(t, 0.0)).unwrap();
        let b = spherical_phi(&p, c(t, 0.0)).unwrap();
        assert!(rel(a, b) < 1e-14);
    }
    assert!(chi_spherical_d2(0.0, &SphericalParams::new(3, 0.3), c(0.5, 0.0)).is_err());
}

#[test]
fn mass_parametrization() {
    for d in 1..6u32 {
        let rho = (d as f64 - 1.0) / 2.0;
        for m in [0.1, 0.9, 2.5, 7.0] {
            let lam = lambda_of_mass(m, d);
            assert!((lam * lam - (rho * rho - m * m)).norm() < 1e-12);
            assert!(lam.re >= 0.0 && lam.im >= 0.0);
            assert!(SphericalParams::new(d, lam).kostant_positive_definite());
        }
    }
}

#[test]
fn region_tags() {
    let x = LorentzVector::basis(3, 1);
    assert_eq!(
        region_tag(&x, &cone_point(3, 0.5, true)).unwrap(),
        RegionTag::FutureInterior
    );
    assert_eq!(
        region_tag(&x, &cone_point(3, 0.5, false)).unwrap(),
        RegionTag::PastInterior
    );
    assert_eq!(
        region_tag(&x, &spacelike_point(3, 0.5)).unwrap(),
        RegionTag::OutsideClosure
    );
    assert_eq!(region_tag(&x, &x).unwrap(), RegionTag::OnBoundary);
}

#[test]
fn boundary_side_table() {
    use RegionTag::*;
    assert_eq!(boundary_side(Sign::Plus, FutureInterior).unwrap(), Some(CutSide::Below));
    assert_eq!(
        boundary_side(Sign::Minus, FutureInterior).unwrap(),
        Some(CutSide::Above)
    );
    assert_eq!(boundary_side(Sign::Plus, PastInterior).unwrap(), Some(CutSide::Above));
    assert_eq!(boundary_side(Sign::Minus, PastInterior).unwrap(), Some(CutSide::Below));
    assert_eq!(boundary_side(Sign::Plus, OutsideClosure).unwrap(), None);
    assert_eq!(boundary_side(Sign::Plus, OnBoundary), Err(Error::OnLightcone));
}

#[test]
fn boundary_values_agree_with_crown_limits() {
    // D⁺ is the boundary value from Ξ₊, approached by z_ε → e₁.
    for d in 2..=5usize {
        let p = SphericalParams::new(d as u32, c(0.3, 0.4));
        for future in [true, false] {
            let y = cone_point(d, 0.9, future);
            let x = LorentzVector::basis(d, 1);
            let plus = boundary_d(&p, Sign::Plus, &x, &y).unwrap();
            let minus = boundary_d(&p, Sign::Minus, &x, &y).unwrap();
            let yc = y.to_complex();
            let approach = |sign: f64| {
                eps_limit(
                    |e| {
                        let z = ComplexLorentzVector::new(
                            [vec![c(0.0, sign * e.sin()), c(e.cos(), 0.0)], vec![c(0.0, 0.0); d - 1]].concat(),
                        )
                        .unwrap();
                        kernel_q(&p, &z, &yc).unwrap()
                    },
                    &EPS_GRID,
                )
            };
            assert!(rel(plus, approach(1.0)) < 1e-6, "d={d} future={future}");
            assert!(rel(minus, approach(-1.0)) < 1e-6, "d={d} future={future}");
        }
    }
}

#[test]
fn jump_closed_form_matches_boundary_difference() {
    for d in 1..=7usize {
        let x = LorentzVector::basis(d, 1);
        for lam in [c(0.0, 0.7), c(0.3, 0.0), c(0.5, 0.0), c(1.2, 0.3)] {
            let p = SphericalParams::new(d as u32, lam);
            for r in [0.3, 1.4, 3.0] {
                for future in [true, false] {
                    let y = cone_point(d, r, future);
                    let a = jump(&p, &x, &y).unwrap();
                    let b = jump_from_boundary(&p, &x, &y).unwrap();
                    assert!(
                        (a - b).norm() < 1e-10 * b.norm().max(1.0),
                        "d={d} lambda={lam} r={r}: {a} vs {b}"
                    );
                }
            }
        }
    }
}

#[test]
fn jump_matches_eps_limit_oracle() {
    for d in 2..=6usize {
        for lam in [c(0.0, 1.1), c(0.35, 0.0)] {
            let p = SphericalParams::new(d as u32, lam);
            let x = LorentzVector::basis(d, 1);
            for r in [0.4, 1.7] {
                let y = cone_point(d, r, true);
                let oracle = eps_limit(|e| eps_jump(&p, &y, e), &EPS_GRID);
                let j = jump(&p, &x, &y).unwrap();
                assert!(
                    (j - oracle).norm() < 1e-6 * oracle.norm().max(1.0),
                    "d={d} lambda={lam} r={r}"
                );
            }
        }
    }
}

#[test]
fn jump_vanishes_off_the_cone_and_fails_on_it() {
    for d in 1..=5usize {
        let p = SphericalParams::new(d as u32, c(0.2, 0.6));
        let x = LorentzVector::basis(d, 1);
        assert_eq!(jump(&p, &x, &spacelike_point(d, 0.8)).unwrap(), c(0.0, 0.0));
        assert_eq!(jump(&p, &x, &x), Err(Error::OnLightcone));
    }
}

#[test]
fn jump_is_odd_under_time_reflection() {
    for d in 2..=5usize {
        let p = SphericalParams::new(d as u32, c(0.0, 0.9));
        let x = LorentzVector::basis(d, 1);
        let f = jump(&p, &x, &cone_point(d, 1.1, true)).unwrap();
        let b = jump(&p, &x, &cone_point(d, 1.1, false)).unwrap();
        assert!((f + b).norm() < 1e-13 * f.norm());
    }
}

#[test]
fn jump_constants() {
    for d in [2u32, 4, 6] {
        for lam in [c(0.3, 0.0), c(0.0, 1.2)] {
            let p = SphericalParams::new(d, lam);
            let sgn = if (d / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let expect = sgn * 2.0 * C64::i() * (PI * lam).cos();
            assert!(rel(jump_constant(&p).unwrap(), expect) < 1e-13);
        }
    }
    assert!(jump_constant(&SphericalParams::new(1, 0.3)).is_err());
    assert!(jump_future_closed_form(&SphericalParams::new(3, 0.3), -0.5).is_err());
    assert!((limit_const_two(c(0.3, 0.0)) - (PI * 0.3).cos() / PI).norm() < 1e-15);
}

#[test]
fn huygens_predicate() {
    let yes = [(4u32, 0.5), (6, 0.5), (6, 1.5), (8, 2.5)];
    for (d, l) in yes {
        let p = SphericalParams::new(d, l);
        assert!(huygens_support_on_boundary(&p).unwrap(), "d={d} lambda={l}");
        let x = LorentzVector::basis(d as usize, 1);
        for r in [0.2, 1.0, 2.5] {
            assert!(
                jump_from_boundary(&p, &x, &cone_point(d as usize, r, true))
                    .unwrap()
                    .norm()
                    < 1e-10
            );
        }
    }
    let no = [
        (3u32, c(0.5, 0.0)),
        (4, c(0.3, 0.0)),
        (5, c(1.5, 0.0)),
        (6, c(0.0, 1.0)),
        (2, c(0.25, 0.0)),
    ];
    for (d, l) in no {
        let p = SphericalParams::new(d, l);
        assert!(!huygens_support_on_boundary(&p).unwrap(), "d={d} lambda={l}");
        let x = LorentzVector::basis(d as usize, 1);
        assert!(jump(&p, &x, &cone_point(d as usize, 1.0, true)).unwrap().norm() > 1e-3);
    }
    assert!(huygens_support_on_boundary(&SphericalParams::new(4, 1.5)).is_err());
    assert!(huygens_support_on_boundary(&SphericalParams::new(4, c(0.0, -1.0))).is_err());
}

#[test]
fn limit_value_product_form_equals_gamma_form() {
    for d in 3..=9u32 {
        for s in [0.3, 1.0, 2.7] {
            let p = SphericalParams::new(d, c(0.0, s));
            let a = boundary_limit_value(&p).unwrap();
            let b = limit_const_one(&p).unwrap();
            assert!(b.im.abs() < 1e-12 * b.norm());
            assert!((a - b.re).abs() < 1e-12 * a.abs(), "d={d} s={s}: {a} vs {b}");
            let rho = (d as f64 - 1.0) / 2.0;
            let g = gamma(c(rho, s)).unwrap().norm_sqr();
            assert!((gamma_abs_sq_product(d, s).unwrap() - g).abs() < 1e-12 * g);
        }
    }
}

#[test]
fn limit_at_antipode_by_extrapolation() {
    // cos(t/2)^{d−2} φ_{is}(a_{it}) at t = π − ε extrapolated to ε = 0.
    for d in 3..=6u32 {
        let p = SphericalParams::new(d, c(0.0, 1.3));
        let f = |e: f64| {
            let t = PI - e;
            (t / 2.0).cos().powi(d as i32 - 2) * spherical_phi(&p, c(0.0, t)).unwrap()
        };
        let lim = eps_limit(f, &[2e-3, 1e-3, 5e-4, 2.5e-4]);
        let expect = boundary_limit_value(&p).unwrap();
        assert!(
            (lim.re - expect).abs() < 1e-6 * expect.abs(),
            "d={d}: {lim} vs {expect}"
        );
    }
}

#[test]
fn psi_equals_h_integral() {
    for d in 2..=5u32 {
        let lam = c((d as f64 - 3.0) / 2.0 + 1.2, 0.4);
        for t in [0.4, 1.5] {
            let legendre = psi_lambda(lam, d, t).unwrap();
            let series = psi_lambda_series(lam, d, t).unwrap();
            let quad = psi_quadrature(lam, d, t);
            assert!(rel(legendre, quad) < 1e-9, "d={d} t={t}: {legendre} vs {quad}");
            assert!(rel(series, quad) < 1e-9, "d={d} t={t}: {series} vs {quad}");
        }
    }
}

#[test]
fn psi_convergence_domain() {
    assert_eq!(psi_lambda(c(0.9, 0.0), 5, 1.0), Err(Error::ConvergenceDomain));
    assert_eq!(psi_lambda(c(0.0, 3.0), 3, 1.0), Err(Error::ConvergenceDomain));
    assert!(psi_lambda(c(1.1, 0.0), 5, 1.0).is_ok());
    assert!(psi_lambda(c(1.1, 0.0), 5, -1.0).is_err());
}

#[test]
fn psi_asymptotics() {
    // Ψ_λ(a_t e₁) ~ c⁺(λ) (cosh t)^{−λ−ρ} as t → ∞
    let (lam, d) = (c(1.4, 0.3), 4u32);
    let rho = 1.5;
    let t = 12.0f64;
    let v = psi_lambda(lam, d, t).unwrap();
    let lead = c_plus(lam, d).unwrap() * ((-lam - rho) * t.cosh().ln()).exp();
    assert!(rel(v, lead) < 1e-9);
    assert!(rel(phi_horospherical(lam, d, t).unwrap(), lead / c_plus(lam, d).unwrap()) < 1e-9);
}

#[test]
fn decomposition_residuals() {
    for d in 2..=6u32 {
        for lam in [c(0.3, 0.0), c(0.0, 1.7), c(1.25, -0.4)] {
            for t in [0.6, 2.0] {
                let dec = decompose_q(lam, d, t).unwrap();
                assert!(
                    dec.residual < 1e-10 * dec.lhs.norm().max(1.0),
                    "d={d} lambda={lam} t={t}"
                );
            }
        }
    }
    assert!(decompose_q(c(2.0, 0.0), 3, 1.0).is_err());
    assert!(decompose_q(c(0.5, 0.0), 3, 0.0).is_err());
}

#[test]
fn horospherical_function_on_a() {
    let lam = c(0.7, 0.2);
    for d in 1..=4u32 {
        let rho = (d as f64 - 1.0) / 2.0;
        for t in [-1.0, 0.0, 2.0] {
            let g = boost_matrix(d as usize, t);
            let v = horospherical_p(lam, d, &g).unwrap();
            assert!(rel(v, (-(lam + rho) * t).exp()) < 1e-13);
        }
    }
    assert!(horospherical_p(lam, 2, &DMatrix::identity(4, 4)).is_err());
}

fn rotation(d: usize, i: usize, j: usize, th: f64) -> DMatrix<f64> {
    let mut m = DMatrix::identity(d + 1, d + 1);
    m[(i, i)] = th.cos();
    m[(j, j)] = th.cos();
    m[(i, j)] = -th.sin();
    m[(j, i)] = th.sin();
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_is_even_in_lambda_and_t(d in 1u32..7, re in 0.0f64..2.0, im in -3.0f64..3.0, t in -3.0f64..3.0) {
        let p = SphericalParams::new(d, c(re, im));
        let q = SphericalParams::new(d, c(-re, -im));
        let a = spherical_phi(&p, c(t, 0.0)).unwrap();
        prop_assert!((a - spherical_phi(&q, c(t, 0.0)).unwrap()).norm() <= 1e-10 * a.norm().max(1.0));
        prop_assert!((a - spherical_phi(&p, c(-t, 0.0)).unwrap()).norm() <= 1e-10 * a.norm().max(1.0));
    }

    #[test]
    fn d3_closed_form(re in 0.01f64..2.0, im in -3.0f64..3.0, t in 0.01f64..4.0) {
        let lam = c(re, im);
        let p = SphericalParams::new(3, lam);
        let expect = (lam * t).sinh() / (lam * t.sinh());
        let v = spherical_phi(&p, c(t, 0.0)).unwrap();
        prop_assert!((v - expect).norm() <= 1e-11 * expect.norm().max(1.0));
    }

    #[test]
    fn horospherical_right_equivariance(
        d in 2usize..5, lr in -1.0f64..1.0, li in -2.0f64..2.0,
        t1 in -1.5f64..1.5, th in -3.0f64..3.0, t2 in -1.5f64..1.5, s in -2.0f64..2.0,
    ) {
        // p(g a_s) = e^{−(λ+ρ)s} p(g) and p(g m) = p(g) for m fixing e₀, e₁
        let lam = c(lr, li);
        let rho = (d as f64 - 1.0) / 2.0;
        let g = boost_matrix(d, t1) * rotation(d, 1, 2, th) * boost_matrix(d, t2);
        let base = horospherical_p(lam, d as u32, &g);
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        let shifted = horospherical_p(lam, d as u32, &(&g * boost_matrix(d, s))).unwrap();
        prop_assert!((shifted - (-(lam + rho) * s).exp() * base).norm() <= 1e-10 * shifted.norm().max(1e-300));
        if d >= 3 {
            let m = rotation(d, 2, 3, 0.7 * th + 0.1);
            let fixed = horospherical_p(lam, d as u32, &(&g * m)).unwrap();
            prop_assert!((fixed - base).norm() <= 1e-11 * base.norm().max(1e-300));
        }
    }

    #[test]
    fn jump_is_boost_invariant(d in 2usize..6, im in 0.1f64..2.0, r in 0.2f64..2.5, s in -1.5f64..1.5) {
        use desitter::lorentz_geometry::boost_real;
        let p = SphericalParams::new(d as u32, c(0.0, im));
        let x = LorentzVector::basis(d, 1);
        let y = cone_point(d, r, true);
        let a = jump(&p, &x, &y).unwrap();
        let b = jump(&p, &boost_real(&x, s), &boost_real(&y, s)).unwrap();
        prop_assert!((a - b).norm() <= 1e-8 * a.norm().max(1.0));
    }
}
