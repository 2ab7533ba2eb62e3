//! Torus Fourier inversion of the lattice values of `J`.
//!
//! The torus `t / 2 pi Q^vee` is parametrized by `x = 2 pi sum_i theta_i alpha_i^vee`
//! with `theta` in `[0, 1)^r`, so `e^{i <tau, x>} = e^{2 pi i k . theta}` for `tau`
//! with fundamental-weight coordinates `k`, and Haar measure is `d theta`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use lrbox_core::rational::to_f64;
use lrbox_core::LatticeMeasure;
use lrbox_rootsys::{RootType, Weight};
use lrbox_volumefn::VolumeContext;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::DeconvError;

pub const MAX_FOURIER_RANK: usize = 3;

/// A trigonometric polynomial `sum_k a_k e^{2 pi i k . theta}`.
type Trig = Vec<(Vec<i64>, f64)>;

/// Uniform grid of `n` points per axis, axis `i` offset by `s_i` of a step with
/// `s_i` the fractional part of `(i + 1) / golden ratio`.
struct Grid {
    n: usize,
    rank: usize,
    bound: i64,
    /// `phase[i][m + bound][j] = e^{2 pi i m (j + s_i) / n}`.
    phase: Vec<Vec<Vec<Complex64>>>,
}

/// Zeros of `R` lie on rational subtori; irrational offsets keep every grid
/// point away from them.
fn axis_offset(i: usize) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    ((i + 1) as f64 * g).fract()
}

impl Grid {
    fn new(n: usize, rank: usize, bound: i64) -> Self {
        let phase = (0..rank)
            .map(|i| {
                let s = axis_offset(i);
                (-bound..=bound)
                    .map(|m| (0..n).map(|j| Complex64::from_polar(1.0, 2.0 * PI * m as f64 * (j as f64 + s) / n as f64)).collect())
                    .collect()
            })
            .collect();
        Grid { n, rank, bound, phase }
    }

    fn len(&self) -> usize {
        self.n.pow(self.rank as u32)
    }

    fn index(&self, mut flat: usize) -> Vec<usize> {
        (0..self.rank)
            .map(|_| {
                let j = flat % self.n;
                flat /= self.n;
                j
            })
            .collect()
    }

    fn eval(&self, p: &Trig, at: &[usize]) -> Complex64 {
        p.iter()
            .map(|(k, a)| {
                k.iter().zip(at).enumerate().fold(Complex64::new(*a, 0.0), |acc, (i, (&m, &j))| {
                    acc * self.phase[i][(m + self.bound) as usize][j]
                })
            })
            .sum()
    }
}

fn max_abs(p: &Trig) -> i64 {
    p.iter().flat_map(|(k, _)| k.iter().map(|c| c.abs())).max().unwrap_or(0)
}

fn r_polynomial(ctx: &VolumeContext) -> Trig {
    ctx.support.iter().map(|(tau, b)| (ctx.rs.to_weight_coords(tau).expect("weight"), to_f64(b))).collect()
}

/// The quadrature behind [`multiplicities_from_j_fourier`].
#[derive(Clone, Debug)]
pub struct FourierReport {
    pub estimate: Complex64,
    pub grid: usize,
    pub frequency_bound: i64,
}

impl FourierReport {
    pub fn nearest(&self) -> i64 {
        self.estimate.re.round() as i64
    }

    pub fn residual(&self) -> f64 {
        (self.estimate.re - self.estimate.re.round()).abs() + self.estimate.im.abs()
    }
}

/// Averages `(1 / R) sum_tau J(lambda', mu'; tau') e^{i <tau' - nu', x>}` over the grid.
pub fn fourier_quadrature(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<FourierReport, DeconvError> {
    if ctx.rs.rank > MAX_FOURIER_RANK {
        return Err(DeconvError::RankTooLarge { rank: ctx.rs.rank, max: MAX_FOURIER_RANK });
    }
    let ev = ctx.evaluator(lambda, mu)?;
    let target: Vec<i64> = nu.coords.iter().map(|c| c + 1).collect();
    torus_coefficient(ctx, &ev.volume_lattice_measure(), &ev.skew_measure(), &target)
}

/// The `target` Fourier coefficient of `h / R` for a weight-coordinate lattice
/// measure `h = b * g`, where `g` (only its support is used) bounds the frequencies.
pub fn torus_coefficient(
    ctx: &VolumeContext,
    h: &LatticeMeasure,
    g: &LatticeMeasure,
    target: &[i64],
) -> Result<FourierReport, DeconvError> {
    let rs = &ctx.rs;
    if rs.rank > MAX_FOURIER_RANK {
        return Err(DeconvError::RankTooLarge { rank: rs.rank, max: MAX_FOURIER_RANK });
    }
    let rel = |k: &Vec<i64>| k.iter().zip(target).map(|(a, b)| a - b).collect::<Vec<i64>>();
    let numer: Trig = h.iter().map(|(k, v)| (rel(k), to_f64(v))).collect();
    let lhs: Trig = g.iter().map(|(k, v)| (rel(k), to_f64(v))).collect();
    let r = r_polynomial(ctx);
    let frequency_bound = max_abs(&numer).max(max_abs(&lhs));
    let n = 2 * frequency_bound as usize + 4;
    let grid = Grid::new(n, rs.rank, frequency_bound.max(max_abs(&r)));
    let sum: Complex64 = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let at = grid.index(i);
            grid.eval(&numer, &at) / grid.eval(&r, &at)
        })
        .sum();
    Ok(FourierReport { estimate: sum / grid.len() as f64, grid: n, frequency_bound })
}

/// `C_{lambda mu}^nu` by quadrature of the torus integral, for rank at most 3.
pub fn multiplicities_from_j_fourier(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64, DeconvError> {
    if !nu.is_dominant() {
        return Err(lrbox_multoracle::OracleError::NotDominant(nu.coords.clone()).into());
    }
    if !ctx.rs.compatible(lambda, mu, nu) {
        return Ok(0);
    }
    let report = fourier_quadrature(ctx, lambda, mu, nu)?;
    let residual = report.residual();
    if residual >= 1e-6 || report.nearest() < 0 {
        return Err(DeconvError::Residual { value: report.estimate.re, residual });
    }
    Ok(report.nearest() as u64)
}

/// `c(tau)` on the box `|q_i| <= radius` of simple-root coordinates, from a grid of `n` points per axis.
fn c_kernel_grid(ctx: &VolumeContext, radius: i64, n: usize) -> BTreeMap<Vec<i64>, f64> {
    let rs = &ctx.rs;
    let points: Vec<Vec<i64>> = box_points(rs.rank, radius);
    let weights: Vec<Vec<i64>> = points.iter().map(|q| rs.to_weight_coords(&rs.from_root_coords(q)).expect("weight")).collect();
    let r = r_polynomial(ctx);
    let bound = weights.iter().flatten().map(|c| c.abs()).max().unwrap_or(0).max(max_abs(&r));
    let grid = Grid::new(n, rs.rank, bound);
    let inv_r: Vec<f64> = (0..grid.len()).into_par_iter().map(|i| 1.0 / grid.eval(&r, &grid.index(i)).re).collect();
    let values: Vec<f64> = weights
        .par_iter()
        .map(|k| {
            let neg: Trig = vec![(k.iter().map(|c| -c).collect(), 1.0)];
            let s: Complex64 = (0..grid.len()).map(|i| grid.eval(&neg, &grid.index(i)) * inv_r[i]).sum();
            s.re / grid.len() as f64
        })
        .collect();
    points.into_iter().zip(values).collect()
}

fn box_points(rank: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|p| (-radius..=radius).map(move |c| {
            let mut q = p.clone();
            q.push(c);
            q
        })).collect();
    }
    out
}

fn require_type_a(ctx: &VolumeContext) -> Result<(), DeconvError> {
    if ctx.rs.kind != RootType::A {
        return Err(DeconvError::NotTypeA(ctx.rs.label()));
    }
    Ok(())
}

const KERNEL_TOLERANCE: f64 = 1e-9;

/// Experimental: the deconvolution kernel `c(tau)`, `tau` in simple-root coordinates.
///
/// Only meaningful when `R` has no zeros; `truncation` is the grid size per
/// axis, and the estimate is compared with a grid twice as fine.
pub fn c_kernel_numeric(ctx: &VolumeContext, tau: &[i64], truncation: usize) -> Result<f64, DeconvError> {
    require_type_a(ctx)?;
    let radius = tau.iter().map(|c| c.abs()).max().unwrap_or(0);
    let coarse = c_kernel_grid(ctx, radius, truncation)[tau];
    let fine = c_kernel_grid(ctx, radius, 2 * truncation)[tau];
    if (coarse - fine).abs() > KERNEL_TOLERANCE {
        return Err(DeconvError::NoConvergence { coarse, fine });
    }
    Ok(fine)
}

/// Largest error of `sum_tau c(tau) b(nu - tau) = [nu = 0]` over `nu` in the box
/// of radius `radius` minus the reach of `b`.
pub fn c_kernel_window_residual(ctx: &VolumeContext, radius: i64, truncation: usize) -> Result<f64, DeconvError> {
    require_type_a(ctx)?;
    let rs = &ctx.rs;
    let c = c_kernel_grid(ctx, radius, truncation);
    let b: Vec<(Vec<i64>, f64)> =
        ctx.support.iter().map(|(tau, v)| (rs.to_root_coords(tau).expect("root lattice point"), to_f64(v))).collect();
    let reach = b.iter().flat_map(|(q, _)| q.iter().map(|x| x.abs())).max().unwrap_or(0);
    let mut worst: f64 = 0.0;
    for nu in box_points(rs.rank, radius - reach) {
        let s: f64 = b
            .iter()
            .map(|(q, v)| {
                let tau: Vec<i64> = nu.iter().zip(q).map(|(a, b)| a - b).collect();
                c[&tau] * v
            })
            .sum();
        let target = if nu.iter().all(|&x| x == 0) { 1.0 } else { 0.0 };
        worst = worst.max((s - target).abs());
    }
    Ok(worst)
}
