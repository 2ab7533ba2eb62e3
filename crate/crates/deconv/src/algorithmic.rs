//! Tensor product multiplicities from lattice values of `J` by exact deconvolution.

use std::collections::BTreeMap;

use lrbox_core::rational::to_i64_exact;
use lrbox_core::{rat_int, LatticeKind, LatticeMeasure};
use lrbox_rootsys::{RootSystem, Weight};
use lrbox_volumefn::VolumeContext;

use crate::error::DeconvError;
use crate::peel::lattice_deconvolve;

/// `b` restricted to `Q`, keyed by fundamental-weight coordinates.
pub fn b_weight_measure(ctx: &VolumeContext) -> LatticeMeasure {
    let mut m = LatticeMeasure::zero(LatticeKind::Weight, ctx.rs.rank);
    for (tau, b) in ctx.support.iter() {
        m.add_at(ctx.rs.to_weight_coords(tau).expect("root lattice point"), b.clone());
    }
    m
}

/// `sum_nu C^nu sum_w eps(w) delta_{w(nu')}` for an arbitrary pattern `nu -> C^nu`.
pub fn skew_from_multiplicities(rs: &RootSystem, pattern: &BTreeMap<Weight, i64>) -> LatticeMeasure {
    let mut m = LatticeMeasure::zero(LatticeKind::Weight, rs.rank);
    for (nu, &c) in pattern {
        let nup = rs.shifted(nu);
        for w in rs.weyl() {
            m.add_at(rs.to_weight_coords(&w.apply_i64(&nup)).expect("weight"), rat_int(w.sign as i64 * c));
        }
    }
    m
}

/// The lattice values of `J` that a skew measure produces: its convolution with `b|_Q`.
pub fn forward_j_measure(ctx: &VolumeContext, skew: &LatticeMeasure) -> Result<LatticeMeasure, DeconvError> {
    Ok(b_weight_measure(ctx).convolve(skew)?)
}

/// Reads `nu -> C^nu` off a skew measure, checking Weyl skew-symmetry and integrality.
pub fn multiplicities_from_skew(rs: &RootSystem, skew: &LatticeMeasure) -> Result<BTreeMap<Weight, i64>, DeconvError> {
    let mut out = BTreeMap::new();
    for (k, v) in skew.iter() {
        let x = rs.from_weight_coords(k);
        let (xp, eps) = rs.dominant_scaled(&x);
        if eps == 0 {
            return Err(DeconvError::NotSkew(k.clone()));
        }
        let kp = rs.to_weight_coords(&xp).expect("weight");
        if skew.get(&kp) != v * rat_int(eps as i64) {
            return Err(DeconvError::NotSkew(k.clone()));
        }
        if kp == *k {
            let c = to_i64_exact(v).ok_or_else(|| DeconvError::NonInteger { at: k.clone(), value: v.to_string() })?;
            out.insert(Weight::new(k.iter().map(|c| c - 1).collect()), c);
        }
    }
    Ok(out)
}

/// `nu -> C_{lambda mu}^nu` recovered from the lattice values of `J(lambda', mu'; .)`.
pub fn multiplicities_from_j_algorithmic(
    ctx: &VolumeContext,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, u64>, DeconvError> {
    let j = ctx.evaluator(lambda, mu)?.volume_lattice_measure();
    let skew = lattice_deconvolve(&b_weight_measure(ctx), &j)?;
    let mut out = BTreeMap::new();
    for (nu, c) in multiplicities_from_skew(&ctx.rs, &skew)? {
        if c < 0 {
            return Err(DeconvError::NonInteger { at: nu.coords.clone(), value: c.to_string() });
        }
        out.insert(nu, c as u64);
    }
    Ok(out)
}
