//! The relation between `J` at lattice points and triple multiplicities, and
//! the conjugation symmetry of summed LR coefficients and volumes.

use lrbox_core::{rat_int, Rational};
use lrbox_rootsys::Weight;
use num_traits::Zero;

use crate::error::VolumeError;
use crate::evaluator::VolumeContext;

/// `(J(lambda', mu'; nu'), sum_kappa r_kappa C_{lambda mu kappa}^nu)`.
pub fn jlr_sides(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<(Rational, Rational), VolumeError> {
    let rs = &ctx.rs;
    if !rs.compatible(lambda, mu, nu) {
        return Err(VolumeError::Incompatible { lambda: lambda.coords.clone(), mu: mu.coords.clone(), nu: nu.coords.clone() });
    }
    let lhs = ctx.evaluator(lambda, mu)?.volume_j_scaled(&rs.shifted(nu));
    let mut rhs = Rational::zero();
    for (kappa, r) in &ctx.table.r_coeffs {
        let m = ctx.oracle.triple_multiplicity(lambda, mu, kappa, nu)?;
        if m != 0 {
            rhs += r * rat_int(m as i64);
        }
    }
    Ok((lhs, rhs))
}

pub fn jlr_verify(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<bool, VolumeError> {
    let (lhs, rhs) = jlr_sides(ctx, lambda, mu, nu)?;
    Ok(lhs == rhs)
}

/// `-w0(mu)`.
pub fn conjugate(ctx: &VolumeContext, mu: &Weight) -> Weight {
    let rs = &ctx.rs;
    let v: Vec<i64> = rs.longest_element().apply_i64(&rs.weight_vector(mu)).iter().map(|x| -x).collect();
    Weight::new(rs.to_weight_coords(&v).expect("weight"))
}

#[derive(Clone, Debug)]
pub struct ConjugationReport {
    pub mu_bar: Weight,
    /// Summed LR coefficients for `(lambda, mu_bar)` and `(lambda, mu)`.
    pub c: (Rational, Rational),
    /// Summed shifted volumes.
    pub j_shifted: (Rational, Rational),
    /// Summed unshifted volumes, present when `lambda - rho` and `mu - rho` are dominant.
    pub j_unshifted: Option<(Rational, Rational)>,
}

impl ConjugationReport {
    pub fn passed(&self) -> bool {
        self.c.0 == self.c.1 && self.j_shifted.0 == self.j_shifted.1 && self.j_unshifted.as_ref().is_none_or(|(a, b)| a == b)
    }
}

fn summed_c(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<Rational, VolumeError> {
    Ok(rat_int(ctx.oracle.tensor_decomposition(lambda, mu)?.values().sum::<u64>() as i64))
}

/// Sum of `J(lambda', mu'; nu')` over dominant `nu`.
fn summed_j_shifted(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<Rational, VolumeError> {
    let m = ctx.evaluator(lambda, mu)?.volume_lattice_measure();
    Ok(m.iter().filter(|(c, _)| c.iter().all(|&x| x >= 1)).fold(Rational::zero(), |acc, (_, v)| acc + v))
}

/// Sum of `J(lambda, mu; nu)` over dominant `nu` in `lambda + mu + Q`.
fn summed_j_unshifted(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<Rational, VolumeError> {
    let rs = &ctx.rs;
    let one = Weight::new(vec![1; rs.rank]);
    let minus_rho = |w: &Weight| Weight::new(w.coords.iter().zip(&one.coords).map(|(a, b)| a - b).collect());
    let ev = ctx.evaluator(&minus_rho(lambda), &minus_rho(mu))?;
    // Dominant weights nu <= lambda + mu are exactly the dominant weights of V_{lambda + mu}.
    let ch = ctx.oracle.character(&lambda.add(mu))?;
    Ok(ch.dominant.keys().fold(Rational::zero(), |acc, nu| acc + ev.volume_j_scaled(nu)))
}

pub fn conjugation_sums(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<ConjugationReport, VolumeError> {
    let mu_bar = conjugate(ctx, mu);
    let c = (summed_c(ctx, lambda, &mu_bar)?, summed_c(ctx, lambda, mu)?);
    let j_shifted = (summed_j_shifted(ctx, lambda, &mu_bar)?, summed_j_shifted(ctx, lambda, mu)?);
    let strictly = |w: &Weight| w.coords.iter().all(|&x| x >= 1);
    let j_unshifted = if strictly(lambda) && strictly(mu) {
        Some((summed_j_unshifted(ctx, lambda, &mu_bar)?, summed_j_unshifted(ctx, lambda, mu)?))
    } else {
        None
    };
    Ok(ConjugationReport { mu_bar, c, j_shifted, j_unshifted })
}
