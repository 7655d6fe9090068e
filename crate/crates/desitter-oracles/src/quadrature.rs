//! Adaptive 7/15 point Gauss–Kronrod quadrature and Gauss–Legendre rules.

use crate::C64;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One G7K15 panel: Kronrod estimate and `|K15 − G7|`.
pub fn gauss_kronrod<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Adaptive bisection until each panel error is below its share of
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> C64 {
    let (whole, err) = gauss_kronrod(&f, a, b);
    let mut panels = vec![(a, b, whole, err)];
    for _ in 0..20_000 {
        let total: C64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        let tol = abs_tol.max(rel_tol * total.norm());
        if err <= tol {
            return total;
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .fold((0, -1.0), |best, (i, p)| if p.3 > best.1 { (i, p.3) } else { best });
        let (pa, pb, _, _) = panels.swap_remove(idx);
        let m = 0.5 * (pa + pb);
        let (l, le) = gauss_kronrod(&f, pa, m);
        let (r, re) = gauss_kronrod(&f, m, pb);
        panels.push((pa, m, l, le));
        panels.push((m, pb, r, re));
    }
    panels.iter().map(|p| p.2).sum()
}

/// `∫_a^∞ f` by widening panels until a panel contributes less than
/// `tail_tol` relative to the running value. Meant for exponentially
/// decaying `f`; algebraic tails stop early.
pub fn integrate_to_infinity<F: Fn(f64) -> C64>(f: F, a: f64, rel_tol: f64, tail_tol: f64) -> C64 {
    let mut lo = a;
    let mut width = 1.0;
    let mut total = C64::new(0.0, 0.0);
    for _ in 0..200 {
        let piece = integrate(&f, lo, lo + width, 0.0, rel_tol);
        total += piece;
        lo += width;
        if piece.norm() <= tail_tol * total.norm() {
            break;
        }
        width = (width * 1.5).min(4.0);
    }
    total
}

/// Gauss–Legendre nodes and weights on `[−1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pn1) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    (x, w)
}
