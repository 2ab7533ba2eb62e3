//! The density of the eigenvalues of a sum of random orbit elements.

use lrbox_core::rational::to_f64;
use lrbox_core::{rat, Rational, RationalVector};
use lrbox_rootsys::RootSystem;
use num_traits::Zero;

use crate::error::VolumeError;
use crate::evaluator::VolumeContext;

/// Exact `Delta(x)` for a rational point.
pub fn discriminant_exact(rs: &RootSystem, x: &RationalVector) -> Rational {
    rs.positive_roots.iter().map(|a| rs.ip(&rs.unscale(a), x)).product()
}

/// `p(gamma | alpha, beta) = Delta(gamma) Delta(rho) / (Delta(alpha) Delta(beta)) J(alpha, beta; gamma)`.
///
/// The density is with respect to Lebesgue measure in simple-root coordinates.
pub fn horn_density_exact(
    ctx: &VolumeContext,
    alpha: &RationalVector,
    beta: &RationalVector,
    gamma: &RationalVector,
) -> Result<Rational, VolumeError> {
    let rs = &ctx.rs;
    let da = discriminant_exact(rs, alpha);
    let db = discriminant_exact(rs, beta);
    if da.is_zero() || db.is_zero() {
        return Err(VolumeError::Singular);
    }
    let j = ctx.j_unshifted(alpha, beta, gamma)?;
    let drho = discriminant_exact(rs, &rs.unscale(&rs.rho));
    Ok(discriminant_exact(rs, gamma) * drho / (da * db) * j)
}

fn rationalize(x: f64, den: i64) -> Rational {
    rat((x * den as f64).round() as i64, den)
}

/// Floating-point wrapper: all three points are rounded to weight coordinates
/// with denominator `resolution`.
pub fn horn_density(ctx: &VolumeContext, alpha: &[f64], beta: &[f64], gamma: &[f64], resolution: i64) -> Result<f64, VolumeError> {
    let rs = &ctx.rs;
    for v in [alpha, beta, gamma] {
        if v.len() != rs.ambient {
            return Err(VolumeError::Length { expected: rs.ambient, got: v.len() });
        }
    }
    let to_weight = |v: &[f64]| {
        let exact = RationalVector::new(v.iter().map(|c| rationalize(*c, 1 << 20)).collect());
        let coords: Vec<Rational> = rs
            .weight_coords_rat(&exact)
            .iter()
            .map(|c| rationalize(to_f64(c), resolution))
            .collect();
        rs.from_weight_coords_rat(&RationalVector::new(coords))
    };
    let a = to_weight(alpha);
    let b = to_weight(beta);
    let g = to_weight(gamma);
    Ok(to_f64(&horn_density_exact(ctx, &a, &b, &g)?))
}
