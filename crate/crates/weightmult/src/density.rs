//! The Duistermaat-Heckman density `I(lambda'; beta) = b * sum_mu mult_lambda(mu) delta_mu`.

use std::collections::HashMap;

use lrbox_core::{rat_int, LatticeKind, LatticeMeasure, Rational, RationalVector};
use lrbox_rootsys::Weight;
use lrbox_volumefn::VolumeContext;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::WeightError;

/// `I(lambda'; .)` for one dominant weight, with the weight multiplicities cached.
#[derive(Clone)]
pub struct WeightDensity {
    ctx: VolumeContext,
    pub lambda: Weight,
    /// Weights (scaled) with nonzero multiplicity, sorted.
    mults: Vec<(Vec<i64>, u64)>,
    index: HashMap<Vec<i64>, u64>,
}

impl WeightDensity {
    /// All weights of `V_lambda` from its character.
    pub fn new(ctx: &VolumeContext, lambda: &Weight) -> Result<Self, WeightError> {
        let ch = ctx.oracle.character(lambda)?;
        let mults = ch.weights.iter().map(|(k, v)| (k.clone(), *v)).collect();
        Ok(Self::from_multiplicities(ctx, lambda, mults))
    }

    /// Multiplicities only on `center + (reach + 1) hull(W rho)`, each from
    /// Kostant's formula, so `I` is exact on `center + reach hull(W rho)`.
    pub fn local(ctx: &VolumeContext, lambda: &Weight, center: &[i64], reach: i64) -> Result<Self, WeightError> {
        let rs = &ctx.rs;
        if center.len() != rs.ambient {
            return Err(WeightError::Length { expected: rs.ambient, got: center.len() });
        }
        let base = rs.weight_vector(lambda);
        let den = rs.root_coords_den();
        let rel = rs.root_coords_numer(&center.iter().zip(&base).map(|(c, b)| c - b).collect::<Vec<_>>());
        let mid: Vec<i64> = rel.iter().map(|v| (*v as f64 / den as f64).round() as i64).collect();
        let anchor: Vec<i64> = base.iter().zip(&rs.from_root_coords(&mid)).map(|(a, b)| a + b).collect();
        let k = reach + 1;
        let rho_q = rs.root_coords_numer(&rs.rho);
        let bound = rho_q.iter().map(|v| (k * v + den - 1) / den).max().unwrap_or(0) + 1;
        let mut mults = Vec::new();
        let mut c = vec![-bound; rs.rank];
        'outer: loop {
            let x: Vec<i64> = anchor.iter().zip(&rs.from_root_coords(&c)).map(|(a, b)| a + b).collect();
            let rel: Vec<i64> = x.iter().zip(center).map(|(a, b)| a - b).collect();
            let (dom, _) = rs.dominant_scaled(&rel);
            let gap: Vec<i64> = rs.rho.iter().zip(&dom).map(|(r, d)| k * r - d).collect();
            if rs.root_coords_numer(&gap).iter().all(|&g| g >= 0) {
                let m = ctx.oracle.weight_multiplicity_scaled(lambda, &x)?;
                if m != 0 {
                    mults.push((x, m));
                }
            }
            for i in 0..rs.rank {
                c[i] += 1;
                if c[i] <= bound {
                    continue 'outer;
                }
                c[i] = -bound;
            }
            break;
        }
        Ok(Self::from_multiplicities(ctx, lambda, mults))
    }

    /// A density over an explicit list of scaled weights and multiplicities.
    pub fn from_multiplicities(ctx: &VolumeContext, lambda: &Weight, mut mults: Vec<(Vec<i64>, u64)>) -> Self {
        mults.sort();
        let index = mults.iter().cloned().collect();
        WeightDensity { ctx: ctx.clone(), lambda: lambda.clone(), mults, index }
    }

    pub fn multiplicities(&self) -> &[(Vec<i64>, u64)] {
        &self.mults
    }

    /// `sum_mu mult_lambda(mu) delta_mu` in fundamental-weight coordinates.
    pub fn multiplicity_measure(&self) -> LatticeMeasure {
        let rs = &self.ctx.rs;
        let mut m = LatticeMeasure::zero(LatticeKind::Weight, rs.rank);
        for (x, c) in &self.mults {
            m.add_at(rs.to_weight_coords(x).expect("weight"), rat_int(*c as i64));
        }
        m
    }

    /// `I(lambda'; beta)` for `beta` in ambient coordinates.
    pub fn value(&self, beta: &RationalVector) -> Result<Rational, WeightError> {
        let rs = &self.ctx.rs;
        if beta.len() != rs.ambient {
            return Err(WeightError::Length { expected: rs.ambient, got: beta.len() });
        }
        let scaled: Vec<Rational> = beta.iter().map(|c| c * rat_int(rs.den)).collect();
        let q = scaled.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let v: Vec<i64> = scaled
            .iter()
            .map(|c| (c * Rational::from_integer(q.clone())).to_integer().to_i64().expect("coordinate fits in i64"))
            .collect();
        Ok(self.value_scaled_frac(&v, q.to_i64().expect("denominator fits in i64")))
    }

    pub fn value_scaled(&self, x: &[i64]) -> Rational {
        self.value_scaled_frac(x, 1)
    }

    /// `I` at `x / (rs.den * q)` in ambient coordinates.
    pub fn value_scaled_frac(&self, x: &[i64], q: i64) -> Rational {
        let rs = &self.ctx.rs;
        let top = rs.weight_vector(&self.lambda);
        let d: Vec<i64> = x.iter().zip(&top).map(|(a, b)| a - q * b).collect();
        if q == 1 && rs.in_root_lattice(&d) {
            return self.value_lattice(x);
        }
        let mut total = Rational::zero();
        let mut diff = vec![0i64; x.len()];
        for (p, c) in &self.mults {
            for ((d, a), b) in diff.iter_mut().zip(x).zip(p) {
                *d = a - q * b;
            }
            let b = self.ctx.spline.density_scaled_frac(&diff, q);
            if !b.is_zero() {
                total += b * rat_int(*c as i64);
            }
        }
        total
    }

    fn value_lattice(&self, x: &[i64]) -> Rational {
        let mut total = Rational::zero();
        let mut at = vec![0i64; x.len()];
        for (tau, b) in self.ctx.support.iter() {
            for ((a, u), t) in at.iter_mut().zip(x).zip(tau) {
                *a = u - t;
            }
            if let Some(&c) = self.index.get(&at) {
                total += b * rat_int(c as i64);
            }
        }
        total
    }

    /// `sum_{mu in lambda + Q} I(lambda'; mu) delta_mu` by discrete convolution,
    /// in fundamental-weight coordinates.
    pub fn lattice_measure(&self) -> LatticeMeasure {
        let rs = &self.ctx.rs;
        let mut acc: HashMap<Vec<i64>, Rational> = HashMap::new();
        for (p, c) in &self.mults {
            let c = rat_int(*c as i64);
            for (tau, b) in self.ctx.support.iter() {
                let at: Vec<i64> = p.iter().zip(tau).map(|(a, b)| a + b).collect();
                *acc.entry(at).or_insert_with(Rational::zero) += b * &c;
            }
        }
        let mut m = LatticeMeasure::zero(LatticeKind::Weight, rs.rank);
        for (x, v) in acc {
            m.add_at(rs.to_weight_coords(&x).expect("weight"), v);
        }
        m
    }
}

/// `I(lambda'; beta) = sum_{mu in lambda + Q} mult_lambda(mu) b(beta - mu)`, `beta` ambient.
pub fn dh_density_i(ctx: &VolumeContext, lambda: &Weight, beta: &RationalVector) -> Result<Rational, WeightError> {
    WeightDensity::new(ctx, lambda)?.value(beta)
}

/// `sum_{mu in lambda + Q} I(lambda'; mu) delta_mu` in fundamental-weight coordinates.
pub fn i_lattice_measure(ctx: &VolumeContext, lambda: &Weight) -> Result<LatticeMeasure, WeightError> {
    Ok(WeightDensity::new(ctx, lambda)?.lattice_measure())
}
