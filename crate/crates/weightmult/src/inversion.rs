//! Weight multiplicities back from `I`: deconvolution, Fourier inversion,
//! the truncated Laplacian series and the local `A-hat` fit.

use std::collections::BTreeMap;

use lrbox_core::rational::to_i64_exact;
use lrbox_core::Rational;
use lrbox_deconv::{apply_stencil, b_weight_measure, lattice_deconvolve, neumann_stencil, torus_coefficient, LaplacianOperator};
use lrbox_rootsys::{RootSystem, RootType, Weight};
use lrbox_volumefn::{ahat_fit_at, HyperplaneArrangement, LocalFit, VolumeContext};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::density::WeightDensity;
use crate::error::WeightError;

const RESIDUAL_TOLERANCE: f64 = 1e-6;

fn check_lattice(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<(), WeightError> {
    let d: Vec<i64> = rs.weight_vector(lambda).iter().zip(&rs.weight_vector(mu)).map(|(a, b)| a - b).collect();
    if rs.in_root_lattice(&d) {
        Ok(())
    } else {
        Err(WeightError::NotInLattice { lambda: lambda.coords.clone(), mu: mu.coords.clone() })
    }
}

fn to_count(at: &Weight, value: &Rational) -> Result<u64, WeightError> {
    match to_i64_exact(value) {
        Some(c) if c >= 0 => Ok(c as u64),
        _ => Err(WeightError::NonInteger { at: at.coords.clone(), value: value.to_string() }),
    }
}

/// All weight multiplicities of `V_lambda` recovered from the lattice values of
/// `I(lambda'; .)` by deconvolution with `b|_Q`, keyed by weight coordinates.
pub fn multiplicities_from_i_algorithmic(ctx: &VolumeContext, lambda: &Weight) -> Result<BTreeMap<Weight, u64>, WeightError> {
    let i = WeightDensity::new(ctx, lambda)?.lattice_measure();
    let g = lattice_deconvolve(&b_weight_measure(ctx), &i)?;
    let mut out = BTreeMap::new();
    for (k, v) in g.iter() {
        let w = Weight::new(k.clone());
        let c = to_count(&w, v)?;
        out.insert(w, c);
    }
    Ok(out)
}

/// Deconvolves the lattice values of `I(lambda'; .)` and compares every
/// recovered multiplicity with Kostant's formula.
pub fn i_lattice_and_deconv_roundtrip(ctx: &VolumeContext, lambda: &Weight) -> Result<bool, WeightError> {
    let rs = &ctx.rs;
    let recovered = multiplicities_from_i_algorithmic(ctx, lambda)?;
    let ch = ctx.oracle.character(lambda)?;
    if recovered.len() != ch.weights.len() {
        return Ok(false);
    }
    let checks: Vec<bool> = recovered
        .par_iter()
        .map(|(mu, &m)| Ok(ctx.oracle.weight_multiplicity(lambda, mu)? == m && ch.mult(&rs.weight_vector(mu)) == m))
        .collect::<Result<_, WeightError>>()?;
    Ok(checks.into_iter().all(|ok| ok))
}

/// `sum_{mu in lambda + Q} I(lambda'; mu)`, which equals `dim V_lambda`.
pub fn i_total_mass(ctx: &VolumeContext, lambda: &Weight) -> Result<Rational, WeightError> {
    Ok(WeightDensity::new(ctx, lambda)?.lattice_measure().mass())
}

/// `mult_lambda(mu)` by quadrature of `(1 / R) sum_tau I(lambda'; tau) e^{i <tau - mu, x>}`.
pub fn kostka_from_i_fourier(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<u64, WeightError> {
    check_lattice(&ctx.rs, lambda, mu)?;
    let density = WeightDensity::new(ctx, lambda)?;
    let report = torus_coefficient(ctx, &density.lattice_measure(), &density.multiplicity_measure(), &mu.coords)?;
    let residual = report.residual();
    if residual >= RESIDUAL_TOLERANCE {
        return Err(WeightError::Residual { value: report.estimate.re, residual });
    }
    let k = report.nearest();
    if k < 0 {
        return Err(WeightError::NonInteger { at: mu.coords.clone(), value: k.to_string() });
    }
    Ok(k as u64)
}

/// True if every point `mu + floor(d/2) w(rho)` lies strictly inside one domain
/// of polynomiality of `I(lambda'; .)`; false when `mu` is not in `lambda + Q`.
pub fn shielded_pair_test(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<bool, WeightError> {
    if rs.kind != RootType::A {
        return Err(WeightError::NotTypeA(rs.label()));
    }
    if !lambda.is_dominant() || check_lattice(rs, lambda, mu).is_err() {
        return Ok(false);
    }
    let k = (rs.d() / 2) as i64;
    let m = rs.weight_vector(mu);
    let stencil: Vec<Vec<i64>> =
        rs.weyl().iter().map(|w| w.apply_i64(&rs.rho).iter().zip(&m).map(|(r, x)| x + k * r).collect()).collect();
    let arr = HyperplaneArrangement::weight_slices(rs, &rs.shifted(lambda))?;
    Ok(arr.separates_none_scaled(&stencil))
}

fn local_density(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<(WeightDensity, Vec<i64>), WeightError> {
    let rs = &ctx.rs;
    if rs.kind != RootType::A {
        return Err(WeightError::NotTypeA(rs.label()));
    }
    if !shielded_pair_test(rs, lambda, mu)? {
        return Err(WeightError::NotShielded);
    }
    let center = rs.weight_vector(mu);
    let density = WeightDensity::local(ctx, lambda, &center, (rs.d() / 2) as i64)?;
    Ok((density, center))
}

/// `K_lambda^mu = sum_{k <= floor(d/2)} (-D/2)^k I(lambda'; mu)` for a shielded pair.
pub fn kostka_fd_inversion(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<u64, WeightError> {
    let (density, center) = local_density(ctx, lambda, mu)?;
    let stencil = neumann_stencil(&LaplacianOperator::from_context(ctx), ctx.rs.d() / 2);
    let value = apply_stencil(&stencil, |x| density.value_scaled(x), &center);
    to_count(mu, &value)
}

/// `A-hat(Phi+)` applied to the local polynomial of `I(lambda'; .)` at `mu`.
pub fn kostka_local_fit(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<LocalFit, WeightError> {
    let (density, center) = local_density(ctx, lambda, mu)?;
    Ok(ahat_fit_at(&ctx.rs, &center, |x, q| density.value_scaled_frac(x, q))?)
}

pub fn kostka_via_local_fit(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<u64, WeightError> {
    Ok(kostka_local_fit(ctx, lambda, mu)?.value)
}

/// Deterministic sample of shielded pairs with nonzero multiplicity.
///
/// `lambda` has coordinates in `scale/2..=scale` and `mu = lambda - sum c_i alpha_i`
/// with `c_i` in `0..=2 scale`. Gives up after `max_tries` candidates.
pub fn sample_shielded_pairs(
    ctx: &VolumeContext,
    count: usize,
    scale: i64,
    max_tries: usize,
    seed: u64,
) -> Result<Vec<(Weight, Weight, u64)>, WeightError> {
    let rs = &ctx.rs;
    if rs.kind != RootType::A {
        return Err(WeightError::NotTypeA(rs.label()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Weight, Weight, u64)> = Vec::new();
    for _ in 0..max_tries {
        if out.len() >= count {
            break;
        }
        let lambda = Weight::new((0..rs.rank).map(|_| rng.gen_range(scale / 2..=scale)).collect());
        let c: Vec<i64> = (0..rs.rank).map(|_| rng.gen_range(0..=2 * scale)).collect();
        let v: Vec<i64> = rs.weight_vector(&lambda).iter().zip(&rs.from_root_coords(&c)).map(|(a, b)| a - b).collect();
        let mu = Weight::new(rs.to_weight_coords(&v).expect("weight"));
        if out.iter().any(|(l, m, _)| *l == lambda && *m == mu) || !shielded_pair_test(rs, &lambda, &mu)? {
            continue;
        }
        let k = ctx.oracle.weight_multiplicity(&lambda, &mu)?;
        if k > 0 {
            out.push((lambda, mu, k));
        }
    }
    Ok(out)
}
