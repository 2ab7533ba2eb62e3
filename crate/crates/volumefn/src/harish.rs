//! Harish-Chandra orbital integrals and the HCIZ determinant.

use lrbox_rootsys::RootSystem;
use nalgebra::DMatrix;

/// `Delta(x) = prod_{alpha > 0} <alpha, x>` for `x` in ambient coordinates.
pub fn discriminant(rs: &RootSystem, x: &[f64]) -> f64 {
    rs.positive_roots.iter().map(|a| rs.ip_f64(&rs.scaled_to_f64(a), x)).product()
}

fn weyl_sum(rs: &RootSystem, x: &[f64], y: &[f64]) -> f64 {
    rs.weyl().iter().map(|w| w.sign as f64 * rs.ip_f64(&w.apply_f64(y), x).exp()).sum()
}

fn raw(rs: &RootSystem, x: &[f64], y: &[f64], delta_rho: f64) -> f64 {
    delta_rho * weyl_sum(rs, x, y) / (discriminant(rs, x) * discriminant(rs, y))
}

fn is_singular(rs: &RootSystem, x: &[f64]) -> bool {
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    rs.positive_roots
        .iter()
        .any(|a| rs.ip_f64(&rs.scaled_to_f64(a), x).abs() < 1e-9 * scale)
}

/// `int_G exp <Ad_g x, y> dg` by the Harish-Chandra formula.
///
/// Singular arguments are handled by polynomial extrapolation of the
/// regular values along `x + t rho`, `y + t rho` to `t = 0`.
pub fn harish_chandra(rs: &RootSystem, x: &[f64], y: &[f64]) -> f64 {
    if x.iter().all(|v| *v == 0.0) || y.iter().all(|v| *v == 0.0) {
        return 1.0;
    }
    let rho = rs.rho_f64();
    let delta_rho = discriminant(rs, &rho);
    let sx = is_singular(rs, x);
    let sy = is_singular(rs, y);
    if !sx && !sy {
        return raw(rs, x, y, delta_rho);
    }
    let scale = x.iter().chain(y).fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let h0 = 0.05 / scale;
    let shift = |v: &[f64], t: f64, on: bool| -> Vec<f64> {
        if on {
            v.iter().zip(&rho).map(|(a, r)| a + t * r).collect()
        } else {
            v.to_vec()
        }
    };
    let ts: Vec<f64> = (0..6).map(|k| h0 / f64::powi(2.0, k)).collect();
    let mut table: Vec<f64> = ts.iter().map(|&t| raw(rs, &shift(x, t, sx), &shift(y, t, sy), delta_rho)).collect();
    // Neville extrapolation to t = 0.
    for level in 1..ts.len() {
        for i in 0..ts.len() - level {
            let (ti, tj) = (ts[i], ts[i + level]);
            table[i] = (tj * table[i] - ti * table[i + 1]) / (tj - ti);
        }
    }
    table[0]
}

/// Right-hand side of the HCIZ formula for eigenvalue lists `a`, `b`:
/// `prod_{p<N} p! det(exp(a_i b_j)) / (Delta(a) Delta(b))`.
pub fn hciz_determinant(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let m = DMatrix::from_fn(n, n, |i, j| (a[i] * b[j]).exp());
    let factorials: f64 = (1..n).map(|p| (1..=p).map(|k| k as f64).product::<f64>()).product();
    let vdm = |v: &[f64]| -> f64 {
        let mut d = 1.0;
        for i in 0..n {
            for j in i + 1..n {
                d *= v[i] - v[j];
            }
        }
        d
    };
    factorials * m.determinant() / (vdm(a) * vdm(b))
}
