//! Criterion implementations. Every criterion returns its checks; nothing
//! here decides pass or fail beyond the comparison with the stated bound.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use desitter::hypergeom::{
    connection_one, gamma, gauss_limit_value, hyp2f1, hyp2f1_derivative, hyp2f1_series, log_limit_coeff,
    nearest_integer, rgamma, HypergeomParams,
};
use desitter::lorentz_geometry::{
    apply, apply_complex, beta, boost, causal_classify, cosh_strip, cosh_strip_inverse, in_cut_domain,
    is_special_lorentz, on_negative_ray, pair_in_cut, wedge_separating_isometry, CausalClass, ComplexLorentzVector,
    LorentzVector,
};
use desitter::modular_d1::{jump_d1, phi_vw, two_by_two_oracle, AtomicSpectralMeasure, StripPoint};
use desitter::sl2c_matrix_spherical::{
    eigen_coefficients_exact, is_positive_definite, matrix_spherical, matrix_spherical_oriented, MatrixSphericalSpec,
    PositivityLabel,
};
use desitter::spherical::{
    c_plus, decompose_q, gamma_abs_sq_product, huygens_support_on_boundary, jump, jump_from_boundary, kernel_q,
    limit_const_one, phi_horospherical, psi_lambda, spherical_phi, SphericalParams,
};
use desitter::C64;
use desitter_oracles::limits::{eps_limit, EPS_GRID};
use desitter_oracles::quadrature::integrate_to_infinity;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::sampling::{
    complex_lorentz_inverse, midpoints, random_complex_group, random_desitter, random_rotation, rng, spatial, VerifyRng,
};
use crate::{Check, CriterionReport};

const HUYGENS_D2_NOTE: &str =
    "for d=2, lambda=1/2 the jump constant 2i cos(pi lambda) vanishes and 2F1(1,0;1;.) = 1, so the jump is identically zero";
const LIMIT_D3_NOTE: &str =
    "for d=3 the limit is approached linearly in pi-t with slope about 1, so the deviation at pi-t=1e-3 is about 1e-3";
pub const ORIENTATION_NOTE: &str =
    "jump_d1 uses 2i sum w sinh(pi p) sin(p x); the scalar kernel jump 2i sin(pi lambda) sinh(lambda t) at lambda=im is -2i sinh(pi m) sin(m t), the opposite orientation";

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter()
        .fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

/// Runs criterion `id`.
pub fn run(id: u32, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let (title, limit, (checks, notes)) = match id {
        1 => ("d=3 closed form", Some(1.0), c1()),
        2 => ("d=1 closed form", None, c2()),
        3 => ("hypergeometric identities", Some(10.0), c3(seed)),
        4 => ("jump formula vs boundary limits", Some(30.0), c4()),
        5 => ("Huygens principle", None, c5()),
        6 => ("limit constants", None, c6()),
        7 => ("horospherical decomposition", None, c7()),
        8 => ("matrix spherical functions", None, c8(seed)),
        9 => ("geometry", None, c9(seed)),
        10 => ("d=1 oracle", None, c10(seed)),
        _ => (
            "unknown",
            None,
            (vec![Check::below("criterion id", f64::INFINITY, 0.0)], vec![]),
        ),
    };
    CriterionReport {
        id,
        title,
        checks,
        elapsed: start.elapsed(),
        runtime_limit: limit.map(Duration::from_secs_f64),
        notes,
    }
}

type Outcome = (Vec<Check>, Vec<String>);

fn c1() -> Outcome {
    let ts: Vec<f64> = (1..=50).map(|k| 3.0 * k as f64 / 50.0).collect();
    let checks = [c(0.5, 0.0), c(2.0, 0.0), c(0.0, 1.0), c(0.0, 2.0)]
        .into_iter()
        .map(|lam| {
            let p = SphericalParams::new(3, lam);
            let err = max_of(ts.iter().map(|&t| {
                let closed = (lam * t).sinh() / (lam * t.sinh());
                spherical_phi(&p, c(t, 0.0)).map_or(f64::NAN, |v| rel(v, closed))
            }));
            Check::below(format!("lambda={lam} rel err"), err, 1e-9)
        })
        .collect();
    (checks, vec![])
}

fn c2() -> Outcome {
    let ts: Vec<f64> = (1..=50).map(|k| 3.0 * k as f64 / 50.0).collect();
    let checks = [1.0, 2.5]
        .into_iter()
        .map(|m: f64| {
            let p = SphericalParams::new(1, c(0.0, m));
            let err = max_of(
                ts.iter()
                    .map(|&t| spherical_phi(&p, c(t, 0.0)).map_or(f64::NAN, |v| rel(v, c((m * t).cos(), 0.0)))),
            );
            Check::below(format!("m={m} rel err"), err, 1e-9)
        })
        .collect();
    (checks, vec![])
}

fn draw_c(rng: &mut VerifyRng, lo: f64, hi: f64, im: f64) -> C64 {
    c(rng.random_range(lo..hi), rng.random_range(-im..im))
}

/// `c` away from the poles `0, −1, −2, …`.
fn draw_c_param(rng: &mut VerifyRng) -> C64 {
    loop {
        let v = draw_c(rng, -2.5, 3.0, 1.0);
        let (n, dist) = nearest_integer(v);
        if n > 0 || dist > 0.1 {
            return v;
        }
    }
}

fn c3(seed: u64) -> Outcome {
    let mut rng = rng(seed ^ 0x3);
    let draws = 200;
    let mut notes = Vec::new();

    // Euler: F(a,b;c;z) = (1−z)^{c−a−b} F(c−a,c−b;c;z) on ℂ∖[1,∞).
    let mut euler = 0.0f64;
    for _ in 0..draws {
        let (a, b, cc) = (
            draw_c(&mut rng, -2.0, 2.0, 1.0),
            draw_c(&mut rng, -2.0, 2.0, 1.0),
            draw_c_param(&mut rng),
        );
        let z = loop {
            let z = c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            if !(z.re > 0.9 && z.im.abs() < 0.1) {
                break z;
            }
        };
        let lhs = hyp2f1(&HypergeomParams::new(a, b, cc), z);
        let rhs = hyp2f1(&HypergeomParams::new(cc - a, cc - b, cc), z).map(|f| (1.0 - z).powc(cc - a - b) * f);
        euler = euler.max(match (lhs, rhs) {
            (Ok(l), Ok(r)) => rel(l, r),
            _ => f64::NAN,
        });
    }

    // Connection at 1: both sides by the defining series on the lens
    // |z| < 0.85, |1−z| < 0.85, plus the library's connection_one.
    let mut conn = 0.0f64;
    let mut conn_lib = 0.0f64;
    for _ in 0..draws {
        let (a, b, cc) = loop {
            let (a, b) = (draw_c(&mut rng, -2.0, 2.0, 1.0), draw_c(&mut rng, -2.0, 2.0, 1.0));
            let cc = draw_c_param(&mut rng);
            if nearest_integer(cc - a - b).1 > 0.05 {
                break (a, b, cc);
            }
        };
        let z = loop {
            let z = c(rng.random_range(0.15..0.85), rng.random_range(-0.6..0.6));
            if z.norm() < 0.85 && (1.0 - z).norm() < 0.85 {
                break z;
            }
        };
        let p = HypergeomParams::new(a, b, cc);
        let s = cc - a - b;
        let rhs = (|| {
            let f1 = hyp2f1_series(&HypergeomParams::new(a, b, 1.0 - s), 1.0 - z)?;
            let f2 = hyp2f1_series(&HypergeomParams::new(cc - a, cc - b, 1.0 + s), 1.0 - z)?;
            let gc = gamma(cc)?;
            Ok::<C64, desitter::Error>(
                gc * gamma(s)? * rgamma(cc - a) * rgamma(cc - b) * f1
                    + (1.0 - z).powc(s) * gc * gamma(-s)? * rgamma(a) * rgamma(b) * f2,
            )
        })();
        let lhs = hyp2f1_series(&p, z);
        conn = conn.max(match (&lhs, rhs) {
            (Ok(l), Ok(r)) => rel(r, *l),
            _ => f64::NAN,
        });
        conn_lib = conn_lib.max(match (&lhs, connection_one(&p, z)) {
            (Ok(l), Ok(r)) => rel(r, *l),
            _ => f64::NAN,
        });
    }

    // Gauss limit at distance 1e-5; Re(c−a−b) ∈ [1, 3] keeps the
    // ε^{c−a−b} remainder below the tolerance.
    let eps = 1e-5;
    let mut gauss = 0.0f64;
    for _ in 0..draws {
        let (a, b) = (draw_c(&mut rng, 0.1, 2.0, 0.5), draw_c(&mut rng, -1.5, 2.0, 0.5));
        let s = c(rng.random_range(1.0..3.0), rng.random_range(-0.5..0.5));
        let p = HypergeomParams::new(a, b, a + b + s);
        let v = hyp2f1(&p, c(1.0 - eps, 0.0));
        gauss = gauss.max(match (v, gauss_limit_value(&p)) {
            (Ok(v), Ok(l)) => rel(v, l),
            _ => f64::NAN,
        });
    }

    // Log limit with c = a + b. The quotient F/(−log(1−t)) carries a
    // constant/log ε remainder, so the limit is read off as (1−t)F′(t),
    // which has the same limit and an O(ε log ε) remainder.
    let mut logl = 0.0f64;
    let mut quotient = 0.0f64;
    for _ in 0..draws {
        let (a, b) = (draw_c(&mut rng, 0.1, 2.5, 0.5), draw_c(&mut rng, 0.1, 2.5, 0.5));
        let p = HypergeomParams::new(a, b, a + b);
        let t = c(1.0 - eps, 0.0);
        let coef = log_limit_coeff(&p);
        let est = hyp2f1_derivative(&p, t).map(|d| eps * d);
        logl = logl.max(match (&est, &coef) {
            (Ok(e), Ok(k)) => rel(*e, *k),
            _ => f64::NAN,
        });
        if let (Ok(f), Ok(k)) = (hyp2f1(&p, t), &coef) {
            quotient = quotient.max(rel(f / (-eps.ln()), *k));
        }
    }
    notes.push(format!(
        "log limit: plain quotient F/(-log eps) deviates by up to {quotient:.2e} at eps=1e-5 (constant over log eps remainder)"
    ));

    (
        vec![
            Check::below("Euler transform max rel residual", euler, 1e-9),
            Check::below("connection formula (series both sides) max rel residual", conn, 1e-9),
            Check::below("connection_one max rel residual", conn_lib, 1e-9),
            Check::below("Gauss limit at 1-1e-5 max rel deviation", gauss, 1e-3),
            Check::below("log limit at 1-1e-5 max rel deviation", logl, 1e-3),
        ],
        notes,
    )
}

/// `y ∈ I⁺(e₁)` with `β(e₁, y) = −cosh r`.
fn future_point(d: usize, r: f64) -> LorentzVector {
    let mut v = vec![0.0; d + 1];
    v[0] = r.sinh();
    v[1] = r.cosh();
    LorentzVector::new(v).expect("d >= 1")
}

/// `Q_λ(z_t, y) − Q_λ(z̄_t, y)` with `z_t = i sin ε e₀ + cos ε e₁`, the two
/// approaches to `e₁` from `Ξ±`.
fn eps_jump(p: &SphericalParams, y: &LorentzVector, eps: f64) -> C64 {
    let d = y.d();
    let mut zc = vec![c(0.0, 0.0); d + 1];
    zc[0] = c(0.0, eps.sin());
    zc[1] = c(eps.cos(), 0.0);
    let z = ComplexLorentzVector::new(zc).expect("d >= 1");
    let yc = y.to_complex();
    match (kernel_q(p, &z, &yc), kernel_q(p, &z.conj(), &yc)) {
        (Ok(a), Ok(b)) => a - b,
        _ => c(f64::NAN, f64::NAN),
    }
}

/// ε-limit oracle for the jump at `(e₁, y)`, extrapolated over the shared
/// ε grid.
pub fn eps_limit_jump(p: &SphericalParams, y: &LorentzVector) -> C64 {
    eps_limit(|e| eps_jump(p, y, e), &EPS_GRID)
}

fn c4() -> Outcome {
    let mut checks = Vec::new();
    let betas = midpoints(-3.0, -1.0, 20);
    for d in 2..=5usize {
        let x = LorentzVector::basis(d, 1);
        for lam in [c(0.3, 0.0), c(0.0, 1.0), c(0.0, 1.3)] {
            let p = SphericalParams::new(d as u32, lam);
            let err = max_of(betas.iter().map(|&b| {
                let y = future_point(d, (-b).acosh());
                let oracle = eps_limit_jump(&p, &y);
                jump(&p, &x, &y).map_or(f64::NAN, |j| rel(j, oracle))
            }));
            checks.push(Check::below(format!("d={d} lambda={lam} rel err"), err, 1e-5));
        }
    }
    (checks, vec![])
}

fn c5() -> Outcome {
    let rs = midpoints(0.0, 3.0, 50);
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let sup =
        |d: usize, lam: f64, f: &dyn Fn(&SphericalParams, &LorentzVector, &LorentzVector) -> desitter::Result<C64>| {
            let p = SphericalParams::new(d as u32, lam);
            let x = LorentzVector::basis(d, 1);
            max_of(
                rs.iter()
                    .map(|&r| f(&p, &x, &future_point(d, r)).map_or(f64::NAN, |v| v.norm())),
            )
        };
    for (d, lam) in [(4usize, 0.5), (6, 1.5)] {
        checks.push(Check::below(
            format!("(d,lambda)=({d},{lam}) max|jump|"),
            sup(d, lam, &jump),
            1e-10,
        ));
        checks.push(Check::below(
            format!("(d,lambda)=({d},{lam}) max|D+ - D-| from boundary values"),
            sup(d, lam, &jump_from_boundary),
            1e-10,
        ));
    }
    for (d, lam) in [(4usize, 0.3), (3, 0.5), (2, 0.5)] {
        let mut ch = Check::above(format!("(d,lambda)=({d},{lam}) max|jump|"), sup(d, lam, &jump), 1e-3);
        if d == 2 && !ch.passed() {
            ch = ch.documented(HUYGENS_D2_NOTE);
            notes.push(format!(
                "(2,1/2): max|D+ - D-| from boundary values = {:.3e}",
                sup(d, lam, &jump_from_boundary)
            ));
        }
        checks.push(ch);
    }
    let mut mismatches = 0.0;
    // (2, ½) sits on the edge λ = ρ of the admissible range and is rejected.
    for (d, lam, expect) in [
        (4u32, 0.5, Some(true)),
        (6, 1.5, Some(true)),
        (6, 0.5, Some(true)),
        (4, 0.3, Some(false)),
        (3, 0.5, Some(false)),
        (2, 0.5, None),
    ] {
        if huygens_support_on_boundary(&SphericalParams::new(d, lam)).ok() != expect {
            mismatches += 1.0;
        }
    }
    checks.push(Check::below("predicate mismatches", mismatches, 0.5));
    (checks, notes)
}

fn c6() -> Outcome {
    let mut checks = Vec::new();
    let t = PI - 1e-3;
    for d in [3u32, 4, 5] {
        let p = SphericalParams::new(d, c(0.0, 1.0));
        let dev = match (limit_const_one(&p), spherical_phi(&p, c(0.0, t))) {
            (Ok(k), Ok(phi)) => rel(phi * ((1.0 + t.cos()) / 2.0).powf((d as f64 - 2.0) / 2.0), k),
            _ => f64::NAN,
        };
        let mut ch = Check::below(format!("d={d} ConstOne vs value at pi-1e-3"), dev, 1e-3);
        if d == 3 && !ch.passed() {
            ch = ch.documented(LIMIT_D3_NOTE);
        }
        checks.push(ch);
    }
    let mut worst = 0.0f64;
    for d in [3u32, 4, 5, 7] {
        for s in [0.5, 1.0, 3.0] {
            let rho = (d as f64 - 1.0) / 2.0;
            let direct = gamma(c(rho, s)).map_or(f64::NAN, |g| g.norm_sqr());
            let prod = gamma_abs_sq_product(d, s).unwrap_or(f64::NAN);
            worst = max_of([worst, (prod - direct).abs() / direct]);
        }
    }
    checks.push(Check::below("|Gamma(rho+is)|^2 products max rel err", worst, 1e-10));
    (checks, vec![])
}

fn c7() -> Outcome {
    let (d, lam) = (3u32, c(0.4, 0.0));
    let rho = (d as f64 - 1.0) / 2.0;
    let mut dec = 0.0f64;
    let mut series = 0.0f64;
    let mut quad = 0.0f64;
    for t in [0.5f64, 1.0, 2.0] {
        dec = max_of([
            dec,
            decompose_q(lam, d, t).map_or(f64::NAN, |r| r.residual / r.lhs.norm()),
        ]);
        let psi = psi_lambda(lam, d, t);
        let cp = c_plus(lam, d).and_then(|k| phi_horospherical(lam, d, t).map(|f| k * f));
        series = max_of([
            series,
            match (&psi, cp) {
                (Ok(a), Ok(b)) => rel(b, *a),
                _ => f64::NAN,
            },
        ]);
        let (ch, sh) = (t.cosh(), t.sinh());
        let integral = integrate_to_infinity(
            |s| c(ch + sh * s.cosh(), 0.0).powc(-lam - rho) * s.sinh().powi(d as i32 - 2),
            0.0,
            1e-12,
            1e-13,
        );
        quad = max_of([quad, psi.map_or(f64::NAN, |a| rel(a, integral))]);
    }
    (
        vec![
            Check::below("decomposition max rel residual", dec, 1e-8),
            Check::below("Legendre form vs c+ Phi max rel err", series, 1e-8),
            Check::below("Legendre form vs quadrature max rel err", quad, 1e-7),
        ],
        vec![],
    )
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Truth table for the positivity classifier on the grid used below.
fn positivity_truth(ell: u32, mu: i64, lam: C64) -> Option<PositivityLabel> {
    use PositivityLabel::*;
    let key = (lam.re, lam.im);
    match key {
        (0.0, _) => Some(UnitaryPrincipal),
        (1.0 | -1.0 | 0.5 | 1.5, 0.0) if mu == 0 => Some(Complementary),
        (2.0 | -2.0, 0.0) if mu == 0 && ell == 0 => Some(Trivial),
        (2.0 | -2.0, 0.0) if mu == 0 && ell % 2 == 0 => Some(RelativeDiscrete),
        _ => None,
    }
}

fn c8(seed: u64) -> Outcome {
    let mut checks = Vec::new();
    let ts: Vec<f64> = (0..=60).map(|k| -3.0 + 0.1 * k as f64).collect();
    let mut scalar = 0.0f64;
    for lam in [c(0.6, 0.0), c(0.0, 2.0), c(1.0, 0.5), c(3.0, 0.0), c(-1.4, 0.3)] {
        let spec = MatrixSphericalSpec::new(0, 0, lam).expect("valid spec");
        let p = SphericalParams::new(3, lam / 2.0);
        for &t in &ts {
            let v = match (matrix_spherical(&spec, t), spherical_phi(&p, c(t, 0.0))) {
                (Ok(m), Ok(s)) => rel(m[0], s),
                _ => f64::NAN,
            };
            scalar = max_of([scalar, v]);
        }
    }
    checks.push(Check::below("ell=0 vs d=3 scalar max rel err", scalar, 1e-12));

    let mut literal_mismatch = 0.0;
    for (n, dd) in [(0, 1), (1, 3), (-5, 7), (2, 1), (7, 2), (-9, 4), (13, 5)] {
        let lam = rat(n, dd);
        let three = rat(3, 1);
        let twelve = rat(12, 1);
        for (mu, expect) in [(-1i64, -(&three + &lam) / &twelve), (1, -(&three - &lam) / &twelve)] {
            match eigen_coefficients_exact(1, mu, &lam) {
                Ok(a) if a.len() == 2 && a[0] == rat(1, 1) && a[1] == expect => {}
                _ => literal_mismatch += 1.0,
            }
        }
    }
    checks.push(Check::below("ell=1 exact literal mismatches", literal_mismatch, 0.5));

    let mut rng = rng(seed ^ 0x8);
    let mut sym = 0.0f64;
    for _ in 0..50 {
        let ell: u32 = rng.random_range(0..=6);
        let mu = -(ell as i64) + 2 * rng.random_range(0..=ell as i64);
        let lam = c(rng.random_range(-4.0..4.0), rng.random_range(0.1..3.0));
        let t = rng.random_range(-2.0..2.0);
        let spec = MatrixSphericalSpec::new(ell, mu, lam).expect("valid spec");
        let v = match (
            matrix_spherical_oriented(&spec, t),
            matrix_spherical_oriented(&spec.flipped(), t),
        ) {
            (Ok(a), Ok(b)) => {
                let scale = max_of(a.iter().map(|v| v.norm())).max(1.0);
                max_of(a.iter().zip(&b).map(|(x, y)| (x - y).norm() / scale))
            }
            _ => f64::NAN,
        };
        sym = max_of([sym, v]);
    }
    checks.push(Check::below(
        "(mu,lambda) -> (-mu,-lambda) symmetry max residual",
        sym,
        1e-10,
    ));

    let grid = [
        c(0.0, 0.0),
        c(1.0, 0.0),
        c(-1.0, 0.0),
        c(2.0, 0.0),
        c(-2.0, 0.0),
        c(3.0, 0.0),
        c(-3.0, 0.0),
        c(0.5, 0.0),
        c(1.5, 0.0),
        c(0.0, 1.0),
        c(0.0, 2.0),
    ];
    let mut mismatches = 0.0;
    let mut cases = 0;
    for ell in 0..=6u32 {
        for mu in (-(ell as i64)..=ell as i64).step_by(2) {
            for &lam in &grid {
                let spec = MatrixSphericalSpec::new(ell, mu, lam).expect("valid spec");
                let truth = positivity_truth(ell, mu, lam);
                if is_positive_definite(&spec) != (truth.is_some(), truth) {
                    mismatches += 1.0;
                }
                cases += 1;
            }
        }
    }
    checks.push(Check::below(
        format!("classifier mismatches over {cases} cases"),
        mismatches,
        0.5,
    ));
    (checks, vec![])
}

fn c9(seed: u64) -> Outcome {
    let mut rng = rng(seed ^ 0x9);
    let mut checks = Vec::new();

    for d in 1..=4usize {
        let mut violations = 0.0;
        for _ in 0..100_000 {
            let (x, y) = (random_desitter(&mut rng, d), random_desitter(&mut rng, d));
            let b = beta(&x, &y).expect("same dimension");
            let diff = x.sub(&y).expect("same dimension");
            let n = diff
                .coords()
                .iter()
                .skip(1)
                .fold(diff.coords()[0].powi(2), |acc, v| acc - v * v);
            let scale = 1e-10 * (1.0 + x.norm_sq().sqrt() * y.norm_sq().sqrt());
            if (b + 1.0).abs() <= scale {
                continue;
            }
            let class = causal_classify(&x, &y).expect("on manifold");
            if (b > -1.0) != (n < 0.0) || (b > -1.0) != (class == CausalClass::Spacelike) {
                violations += 1.0;
            }
        }
        checks.push(Check::below(
            format!("d={d} spacelike equivalence violations"),
            violations,
            0.5,
        ));
    }

    let mut violations = 0.0;
    for k in 0..10_000 {
        let d = 1 + k % 4;
        let (x, y) = loop {
            let (x, y) = (random_desitter(&mut rng, d), random_desitter(&mut rng, d));
            if causal_classify(&x, &y).ok() == Some(CausalClass::Spacelike) {
                break (x, y);
            }
        };
        let ok = wedge_separating_isometry(&x, &y).is_ok_and(|g| {
            let (gx, gy) = (apply(&g, &x).expect("dim"), apply(&g, &y).expect("dim"));
            let (gx, gy) = (gx.coords(), gy.coords());
            is_special_lorentz(&g, 1e-8)
                && (d == 1 || g[(0, 0)] >= 1.0 - 1e-8)
                && gx[1] > gx[0].abs()
                && -gy[1] > gy[0].abs()
        });
        if !ok {
            violations += 1.0;
        }
    }
    checks.push(Check::below("wedge witness violations (10^4 pairs)", violations, 0.5));

    let mut strip = 0.0f64;
    for _ in 0..10_000 {
        let z = c(rng.random_range(-4.0..4.0), rng.random_range(1e-3..PI - 1e-3));
        strip = max_of([
            strip,
            cosh_strip_inverse(cosh_strip(z)).map_or(f64::NAN, |w| (w - z).norm()),
        ]);
    }
    checks.push(Check::below("cosh strip round trip max abs err", strip, 1e-12));

    let mut violations = 0.0;
    let mut used = 0;
    while used < 1000 {
        let d = 1 + used % 4;
        let g = random_complex_group(&mut rng, d);
        let ginv = complex_lorentz_inverse(&g);
        let gbar_inv = complex_lorentz_inverse(&g.map(|v| v.conj()));
        let x: f64 = rng.random_range(-2.0..2.0);
        let y = if rng.random_bool(0.2) {
            if x.abs() < 0.1 {
                continue;
            }
            if rng.random::<bool>() {
                PI
            } else {
                -PI
            }
        } else {
            rng.random_range(-PI..PI)
        };
        let mut u = boost(&ComplexLorentzVector::i_e0(d), c(x, y));
        if d >= 2 {
            let k = spatial(&random_rotation(&mut rng, d)).map(|v| c(v, 0.0));
            u = apply_complex(&k, &u).expect("dim");
        }
        let v = -C64::i() * u.coords()[0];
        let ambiguous = (v.im.abs() > 1e-13 && v.im.abs() < 1e-10) || (v.im.abs() < 1e-10 && (v.re + 1.0).abs() < 1e-9);
        if ambiguous {
            continue;
        }
        let z = apply_complex(&ginv, &u).expect("dim");
        let w = apply_complex(&gbar_inv, &ComplexLorentzVector::i_e0(d)).expect("dim");
        match (pair_in_cut(&z, &w), in_cut_domain(&u)) {
            (Ok(a), Ok(b)) if a == b && b == !on_negative_ray(v) => {}
            _ => violations += 1.0,
        }
        used += 1;
    }
    checks.push(Check::below(
        "cut domain covariance violations (10^3 configurations)",
        violations,
        0.5,
    ));
    (checks, vec![])
}

fn c10(seed: u64) -> Outcome {
    let mut rng = rng(seed ^ 0xa);
    let mut err = 0.0f64;
    for _ in 0..1000 {
        let m = rng.random_range(0.1..3.0);
        let z = c(rng.random_range(-5.0..5.0), rng.random_range(-PI..=PI));
        let meas = AtomicSpectralMeasure::two_atom(m).expect("m > 0");
        let oracle = two_by_two_oracle(m, z).expect("m > 0");
        let v = phi_vw(&meas, StripPoint::new(z).expect("in strip"));
        err = max_of([err, (v - oracle).norm() / oracle.norm().max(1.0)]);
    }
    let mut jump_mismatch = 0.0;
    for _ in 0..1000 {
        let m = rng.random_range(0.1..3.0);
        let x = rng.random_range(-10.0..10.0);
        let meas = AtomicSpectralMeasure::two_atom(m).expect("m > 0");
        let expect = c(0.0, 2.0 * (PI * m).sinh() * (m * x).sin());
        if jump_d1(&meas, x).ok() != Some(expect) {
            jump_mismatch += 1.0;
        }
    }
    (
        vec![
            Check::below("phi_vw vs cos(mz) max err (relative, unit floor)", err, 1e-12),
            Check::below("jump_d1 exact mismatches (10^3 draws)", jump_mismatch, 0.5),
        ],
        vec![ORIENTATION_NOTE.to_string()],
    )
}
