//! The R-polynomial and the Fourier transform of the box spline.

use lrbox_core::rational::to_f64;
use lrbox_rootsys::RootSystem;

use crate::table::BoxSplineTable;

/// `R(x) = sum_tau b(tau) cos <tau, x>` for `x` in ambient coordinates.
pub fn r_polynomial(table: &BoxSplineTable, x: &[f64]) -> f64 {
    let rs = &table.root_system;
    table
        .support_scaled()
        .iter()
        .map(|(tau, b)| to_f64(b) * rs.ip_f64(&rs.scaled_to_f64(tau), x).cos())
        .sum()
}

/// `R` at `x = 2 pi sum_i y_i omega_i^vee`, where `<tau, x> = 2 pi c(tau) . y`.
pub fn r_polynomial_torus(table: &BoxSplineTable, y: &[f64]) -> f64 {
    table
        .lattice_values
        .iter()
        .map(|(c, b)| {
            let phase: f64 = c.iter().zip(y).map(|(&ci, yi)| ci as f64 * yi).sum();
            to_f64(b) * (2.0 * std::f64::consts::PI * phase).cos()
        })
        .sum()
}

/// Ambient coordinates of `2 pi sum_i y_i omega_i^vee`.
pub fn torus_point(rs: &RootSystem, y: &[f64]) -> Vec<f64> {
    // Solve <alpha_j, x> = 2 pi y_j using the inverse Gram matrix of simple roots.
    let r = rs.rank;
    let simple: Vec<Vec<f64>> = rs.simple_roots.iter().map(|a| rs.scaled_to_f64(a)).collect();
    let gram: Vec<Vec<f64>> = (0..r).map(|i| (0..r).map(|j| rs.ip_f64(&simple[i], &simple[j])).collect()).collect();
    let rhs: Vec<f64> = y.iter().map(|v| 2.0 * std::f64::consts::PI * v).collect();
    let coef = solve_f64(gram, rhs);
    let mut x = vec![0.0; rs.ambient];
    for (c, a) in coef.iter().zip(&simple) {
        for (xi, ai) in x.iter_mut().zip(a) {
            *xi += c * ai;
        }
    }
    x
}

fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, p);
        b.swap(c, p);
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                a[i][j] -= f * a[c][j];
            }
            b[i] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

#[derive(Clone, Debug)]
pub struct RScan {
    pub min: f64,
    /// Torus coordinates `y` of the minimizer.
    pub argmin: Vec<f64>,
    /// The same point in ambient coordinates.
    pub argmin_ambient: Vec<f64>,
    pub refined: bool,
}

/// Grid scan of `R` over the fundamental domain `[0, 1)^r` of `2 pi P^vee`.
///
/// For non-unimodular systems the grid minimum is refined by pattern search.
pub fn scan_r_positivity(table: &BoxSplineTable, resolution: usize) -> RScan {
    let rs = &table.root_system;
    let r = rs.rank;
    let mut best = (f64::INFINITY, vec![0.0; r]);
    let mut idx = vec![0usize; r];
    loop {
        let y: Vec<f64> = idx.iter().map(|&i| i as f64 / resolution as f64).collect();
        let v = r_polynomial_torus(table, &y);
        if v < best.0 {
            best = (v, y);
        }
        let mut i = 0;
        loop {
            if i == r {
                let refined = !lrbox_rootsys::is_unimodular(rs);
                if refined {
                    best = pattern_search(|y| r_polynomial_torus(table, y), best.1, 0.5 / resolution as f64);
                }
                let argmin_ambient = torus_point(rs, &best.1);
                return RScan { min: best.0, argmin: best.1, argmin_ambient, refined };
            }
            idx[i] += 1;
            if idx[i] < resolution {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn pattern_search(f: impl Fn(&[f64]) -> f64, start: Vec<f64>, step: f64) -> (f64, Vec<f64>) {
    let mut x = start;
    let mut fx = f(&x);
    let mut h = step;
    while h > 1e-12 {
        let mut moved = false;
        for i in 0..x.len() {
            for s in [h, -h] {
                let mut y = x.clone();
                y[i] += s;
                let fy = f(&y);
                if fy < fx {
                    x = y;
                    fx = fy;
                    moved = true;
                }
            }
        }
        if !moved {
            h /= 2.0;
        }
    }
    (fx, x)
}

fn sinc_half(u: f64) -> f64 {
    let h = u / 2.0;
    if h.abs() < 1e-8 {
        1.0 - h * h / 6.0
    } else {
        h.sin() / h
    }
}

/// `j^{1/2}(x) = prod_{alpha > 0} sin(<alpha,x>/2) / (<alpha,x>/2)`.
pub fn fourier_symbol(rs: &RootSystem, x: &[f64]) -> f64 {
    rs.positive_roots.iter().map(|a| sinc_half(rs.ip_f64(&rs.scaled_to_f64(a), x))).product()
}

/// Sum of `j^{1/2}(x + eta)` over `eta = 2 pi sum n_i omega_i^vee` with `|n_i| <= radius`.
pub fn poisson_sum(rs: &RootSystem, x: &[f64], radius: i64) -> f64 {
    let base: Vec<f64> = rs.positive_roots.iter().map(|a| rs.ip_f64(&rs.scaled_to_f64(a), x)).collect();
    let coeffs = &rs.positive_roots_q;
    let r = rs.rank;
    let tau = 2.0 * std::f64::consts::PI;
    let mut n = vec![-radius; r];
    let mut total = 0.0;
    loop {
        let mut term = 1.0;
        for (a, c) in base.iter().zip(coeffs) {
            let shift: i64 = c.iter().zip(&n).map(|(ci, ni)| ci * ni).sum();
            term *= sinc_half(a + tau * shift as f64);
        }
        total += term;
        let mut i = 0;
        loop {
            if i == r {
                return total;
            }
            n[i] += 1;
            if n[i] <= radius {
                break;
            }
            n[i] = -radius;
            i += 1;
        }
    }
}

/// Truncated Poisson sums at radii `R, 2R, 4R` combined by two Richardson steps in `1/R`.
pub fn poisson_sum_extrapolated(rs: &RootSystem, x: &[f64], radius: i64) -> f64 {
    let s: Vec<f64> = [radius, 2 * radius, 4 * radius].iter().map(|&k| poisson_sum(rs, x, k)).collect();
    let r1 = [2.0 * s[1] - s[0], 2.0 * s[2] - s[1]];
    (4.0 * r1[1] - r1[0]) / 3.0
}
