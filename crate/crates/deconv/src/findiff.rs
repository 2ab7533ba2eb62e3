//! `C = sum_{k <= floor(d/2)} (-D/2)^k J(lambda', mu'; nu')` for shielded triples of type A.

use lrbox_core::rational::to_i64_exact;
use lrbox_core::Rational;
use lrbox_rootsys::{RootType, Weight};
use lrbox_volumefn::{shielded_test, VolumeContext, VolumeError, VolumeEvaluator};

use crate::error::DeconvError;
use crate::laplacian::{apply_stencil, neumann_stencil, LaplacianOperator};

/// The truncated series applied to `J` at `nu'`, without the shielding check.
///
/// `coeff` supplies `C_{lambda mu}^tau` for the local skew measure.
pub fn finite_difference_value_with<F>(
    ctx: &VolumeContext,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    coeff: F,
) -> Result<Rational, DeconvError>
where
    F: Fn(&Weight) -> Result<u64, VolumeError>,
{
    let rs = &ctx.rs;
    let order = rs.d() / 2;
    let nup = rs.shifted(nu);
    let ev = VolumeEvaluator::local_with(ctx, lambda, mu, &nup, order as i64, coeff)?;
    let stencil = neumann_stencil(&LaplacianOperator::from_context(ctx), order);
    Ok(apply_stencil(&stencil, |x| ev.volume_j_scaled(x), &nup))
}

pub fn finite_difference_value(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Rational, DeconvError> {
    finite_difference_value_with(ctx, lambda, mu, nu, |t| Ok(ctx.oracle.lr_coefficient(lambda, mu, t)?))
}

/// Like [`finite_difference_inversion`] with `C_{lambda mu}^tau` supplied by `coeff`.
pub fn finite_difference_inversion_with<F>(
    ctx: &VolumeContext,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    coeff: F,
) -> Result<u64, DeconvError>
where
    F: Fn(&Weight) -> Result<u64, VolumeError>,
{
    let rs = &ctx.rs;
    if rs.kind != RootType::A {
        return Err(DeconvError::NotTypeA(rs.label()));
    }
    if !shielded_test(rs, lambda, mu, nu)? {
        return Err(DeconvError::NotShielded);
    }
    let value = finite_difference_value_with(ctx, lambda, mu, nu, coeff)?;
    match to_i64_exact(&value) {
        Some(c) if c >= 0 => Ok(c as u64),
        _ => Err(DeconvError::NonInteger { at: nu.coords.clone(), value: value.to_string() }),
    }
}

pub fn finite_difference_inversion(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64, DeconvError> {
    finite_difference_inversion_with(ctx, lambda, mu, nu, |t| Ok(ctx.oracle.lr_coefficient(lambda, mu, t)?))
}
