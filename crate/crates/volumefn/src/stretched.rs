//! Stretched LR coefficients: polynomiality in `N` and the semiclassical limit.

use lrbox_core::rational::to_f64;
use lrbox_core::{interpolate, rat_int, MultivariatePolynomial, Rational, RationalVector};
use lrbox_multoracle::Oracle;
use lrbox_rootsys::{RootType, Weight};
use num_traits::Zero;

use crate::error::VolumeError;
use crate::evaluator::VolumeContext;

#[derive(Clone, Debug)]
pub struct StretchedFit {
    /// `C_{N lambda, N mu}^{N nu}` as a polynomial in `N`.
    pub polynomial: MultivariatePolynomial,
    /// Oracle values for `N = 1..=n_max`.
    pub values: Vec<u64>,
    /// `(N, predicted, actual)` for `N > n_max`.
    pub predictions: Vec<(i64, Rational, u64)>,
}

/// Degree bound `(n-1)(n-2)/2` for `A_{n-1}`.
pub fn polynomiality_degree(rank: usize) -> u32 {
    (rank * (rank - 1) / 2) as u32
}

/// Fits `C_{N lambda, N mu}^{N nu}` for `N = 1..=n_max` and checks the next `n_check` values.
pub fn stretched_polynomial(
    oracle: &Oracle,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    n_max: i64,
    n_check: i64,
) -> Result<StretchedFit, VolumeError> {
    let rs = oracle.root_system();
    if rs.kind != RootType::A {
        return Err(VolumeError::NotTypeA(rs.label()));
    }
    if !rs.compatible(lambda, mu, nu) {
        return Err(VolumeError::Incompatible { lambda: lambda.coords.clone(), mu: mu.coords.clone(), nu: nu.coords.clone() });
    }
    let c = |n: i64| oracle.lr_coefficient(&lambda.scale(n), &mu.scale(n), &nu.scale(n));
    let values = (1..=n_max).map(c).collect::<Result<Vec<_>, _>>()?;
    let degree = polynomiality_degree(rs.rank).min(n_max.max(1) as u32 - 1);
    let points: Vec<RationalVector> = (1..=n_max).map(|n| RationalVector::from_ints(&[n])).collect();
    let vals: Vec<Rational> = values.iter().map(|&v| rat_int(v as i64)).collect();
    let polynomial = interpolate(&points, &vals, degree)?;
    let mut predictions = Vec::new();
    for n in n_max + 1..=n_max + n_check {
        let predicted = polynomial.eval(&[rat_int(n)]);
        let actual = c(n)?;
        if predicted != rat_int(actual as i64) {
            return Err(VolumeError::PolynomialityViolated { n, predicted: predicted.to_string(), actual });
        }
        predictions.push((n, predicted, actual));
    }
    Ok(StretchedFit { polynomial, values, predictions })
}

#[derive(Clone, Debug)]
pub struct SemiclassicalReport {
    /// `J(lambda, mu; nu)` at the unshifted arguments.
    pub volume: Rational,
    /// `(N, C_{N lambda, N mu}^{N nu} / (N^d J))`.
    pub ratios: Vec<(i64, f64)>,
}

/// Ratios of stretched LR coefficients to `N^d J(lambda, mu; nu)` for strictly dominant weights.
pub fn semiclassical_check(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight, ns: &[i64]) -> Result<SemiclassicalReport, VolumeError> {
    let rs = &ctx.rs;
    let vec = |w: &Weight| rs.unscale(&rs.weight_vector(w));
    let volume = ctx.j_unshifted(&vec(lambda), &vec(mu), &vec(nu))?;
    if volume.is_zero() {
        return Err(VolumeError::ZeroVolume);
    }
    let d = rs.d() as i32;
    let jf = to_f64(&volume);
    let mut ratios = Vec::new();
    for &n in ns {
        let c = ctx.oracle.lr_coefficient(&lambda.scale(n), &mu.scale(n), &nu.scale(n))?;
        ratios.push((n, c as f64 / ((n as f64).powi(d) * jf)));
    }
    Ok(SemiclassicalReport { volume, ratios })
}

/// Both sides of the stretched convolution identity at `gamma`:
/// `J(lambda + rho/N, mu + rho/N; gamma)` by homogeneity from the LR data of
/// `(2N lambda + rho, 2N mu + rho)`, and
/// `N^-d sum_nu C_{N lambda, N mu}^{N nu} sum_w eps(w) b(N gamma - w(N nu + rho))`.
pub fn j_stretched_sides(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, n: i64, gamma: &RationalVector) -> Result<(Rational, Rational), VolumeError> {
    let rs = &ctx.rs;
    let d = rs.d();
    let rho = Weight::new(vec![1; rs.rank]);
    let m = 2 * n;
    let lhs_ev = ctx.evaluator(&lambda.scale(m).add(&rho), &mu.scale(m).add(&rho))?;
    let lhs = lhs_ev.volume_j(&gamma.scale(&rat_int(m)))? / num_traits::pow(rat_int(m), d);
    let rhs_ev = ctx.evaluator(&lambda.scale(n), &mu.scale(n))?;
    let rhs = rhs_ev.volume_j(&gamma.scale(&rat_int(n)))? / num_traits::pow(rat_int(n), d);
    Ok((lhs, rhs))
}
