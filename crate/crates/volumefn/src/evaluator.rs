use std::collections::HashMap;
use std::sync::Arc;

use lrbox_boxspline::{lattice_table, BoxSpline, BoxSplineTable};
use lrbox_core::{rat_int, LatticeKind, LatticeMeasure, Rational, RationalVector};
use lrbox_multoracle::Oracle;
use lrbox_rootsys::{RootSystem, Weight};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::VolumeError;

/// Everything needed to evaluate volume functions for one root system.
#[derive(Clone)]
pub struct VolumeContext {
    pub rs: Arc<RootSystem>,
    pub oracle: Arc<Oracle>,
    pub spline: Arc<BoxSpline>,
    pub table: Arc<BoxSplineTable>,
    /// `(tau, b(tau))` over the lattice support of `b`, `tau` scaled.
    pub support: Arc<Vec<(Vec<i64>, Rational)>>,
}

impl VolumeContext {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self, VolumeError> {
        Self::with_oracle(Arc::new(Oracle::new(rs)))
    }

    pub fn with_oracle(oracle: Arc<Oracle>) -> Result<Self, VolumeError> {
        let rs = oracle.root_system().clone();
        let spline = Arc::new(BoxSpline::new(rs.clone())?);
        let table = Arc::new(lattice_table(&spline));
        let support = Arc::new(table.support_scaled());
        Ok(VolumeContext { rs, oracle, spline, table, support })
    }

    pub fn evaluator(&self, lambda: &Weight, mu: &Weight) -> Result<VolumeEvaluator, VolumeError> {
        VolumeEvaluator::new(self, lambda, mu)
    }

    /// `J(alpha, beta; gamma)` at unshifted strictly dominant rational arguments.
    ///
    /// With `N` the common denominator of the weight coordinates of `alpha` and
    /// `beta`, `N alpha - rho` and `N beta - rho` are dominant weights and
    /// `J(alpha, beta; gamma) = N^-d J(N alpha, N beta; N gamma)`.
    pub fn j_unshifted(&self, alpha: &RationalVector, beta: &RationalVector, gamma: &RationalVector) -> Result<Rational, VolumeError> {
        let rs = &self.rs;
        for v in [alpha, beta, gamma] {
            if v.len() != rs.ambient {
                return Err(VolumeError::Length { expected: rs.ambient, got: v.len() });
            }
        }
        let a = rs.weight_coords_rat(alpha);
        let b = rs.weight_coords_rat(beta);
        if a.iter().chain(b.iter()).any(|c| !c.is_positive()) {
            return Err(VolumeError::NotStrictlyDominant(
                a.iter().chain(b.iter()).map(|c| c.to_string()).collect(),
            ));
        }
        let n = a.iter().chain(b.iter()).fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let nr = Rational::from_integer(n.clone());
        let shift = |c: &RationalVector| {
            Weight::new(c.iter().map(|x| (x * &nr).to_integer().to_i64().expect("fits") - 1).collect())
        };
        let ev = self.evaluator(&shift(&a), &shift(&b))?;
        let value = ev.volume_j(&gamma.scale(&nr))?;
        let scale = num_traits::pow(nr, rs.d());
        Ok(value / scale)
    }
}

/// `J(lambda', mu'; .)` for fixed dominant weights, with the skew measure cached.
#[derive(Clone)]
pub struct VolumeEvaluator {
    pub rs: Arc<RootSystem>,
    pub lambda: Weight,
    pub mu: Weight,
    spline: Arc<BoxSpline>,
    table: Arc<BoxSplineTable>,
    support: Arc<Vec<(Vec<i64>, Rational)>>,
    /// Support of `sum_nu C sum_w eps(w) delta_{w(nu')}` as scaled vectors.
    skew: Vec<(Vec<i64>, i64)>,
    index: Arc<HashMap<Vec<i64>, i64>>,
}

impl VolumeEvaluator {
    pub fn new(ctx: &VolumeContext, lambda: &Weight, mu: &Weight) -> Result<Self, VolumeError> {
        let rs = ctx.rs.clone();
        let mut skew = Vec::new();
        for (nu, c) in ctx.oracle.tensor_decomposition(lambda, mu)? {
            let nup = rs.shifted(&nu);
            for w in rs.weyl() {
                skew.push((w.apply_i64(&nup), w.sign as i64 * c as i64));
            }
        }
        Ok(Self::from_skew(ctx, lambda, mu, skew))
    }

    /// An evaluator over an explicit skew support.
    pub fn from_skew(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, mut skew: Vec<(Vec<i64>, i64)>) -> Self {
        skew.sort();
        let index = Arc::new(skew.iter().cloned().collect());
        VolumeEvaluator {
            rs: ctx.rs.clone(),
            lambda: lambda.clone(),
            mu: mu.clone(),
            spline: ctx.spline.clone(),
            table: ctx.table.clone(),
            support: ctx.support.clone(),
            skew,
            index,
        }
    }

    /// An evaluator valid only on `center + reach * hull(W rho)` (scaled `center`).
    ///
    /// The skew measure is built pointwise from single LR coefficients on
    /// `center + (reach + 1) * hull(W rho)`, so the cost does not grow with the
    /// size of the full tensor product.
    pub fn local(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, center: &[i64], reach: i64) -> Result<Self, VolumeError> {
        Self::local_with(ctx, lambda, mu, center, reach, |nu| Ok(ctx.oracle.lr_coefficient(lambda, mu, nu)?))
    }

    /// Like [`local`](Self::local) with `C_{lambda mu}^nu` supplied by `coeff`.
    pub fn local_with<F>(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, center: &[i64], reach: i64, coeff: F) -> Result<Self, VolumeError>
    where
        F: Fn(&Weight) -> Result<u64, VolumeError>,
    {
        let rs = ctx.rs.clone();
        if center.len() != rs.ambient {
            return Err(VolumeError::Length { expected: rs.ambient, got: center.len() });
        }
        let base: Vec<i64> = rs.shifted(lambda).iter().zip(&rs.weight_vector(mu)).map(|(a, b)| a + b).collect();
        let den = rs.root_coords_den();
        let rel = rs.root_coords_numer(&center.iter().zip(&base).map(|(c, b)| c - b).collect::<Vec<_>>());
        let mid: Vec<i64> = rel.iter().map(|v| (*v as f64 / den as f64).round() as i64).collect();
        let anchor: Vec<i64> = base.iter().zip(&rs.from_root_coords(&mid)).map(|(a, b)| a + b).collect();
        let k = reach + 1;
        let rho_q = rs.root_coords_numer(&rs.rho);
        let bound = rho_q.iter().map(|v| (k * v + den - 1) / den).max().unwrap_or(0) + 1;
        let mut skew = Vec::new();
        let mut c = vec![-bound; rs.rank];
        'outer: loop {
            let x: Vec<i64> = anchor.iter().zip(&rs.from_root_coords(&c)).map(|(a, b)| a + b).collect();
            let rel: Vec<i64> = x.iter().zip(center).map(|(a, b)| a - b).collect();
            let (dom, _) = rs.dominant_scaled(&rel);
            let gap: Vec<i64> = rs.rho.iter().zip(&dom).map(|(r, d)| k * r - d).collect();
            if rs.root_coords_numer(&gap).iter().all(|&g| g >= 0) {
                let (xp, eps) = rs.dominant_scaled(&x);
                if eps != 0 {
                    let tau: Vec<i64> = xp.iter().zip(&rs.rho).map(|(a, b)| a - b).collect();
                    let m = coeff(&Weight::new(rs.to_weight_coords(&tau).expect("weight")))?;
                    if m != 0 {
                        skew.push((x, eps as i64 * m as i64));
                    }
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
        Ok(Self::from_skew(ctx, lambda, mu, skew))
    }

    pub fn skew_support(&self) -> &[(Vec<i64>, i64)] {
        &self.skew
    }

    /// The skew multiplicity measure in fundamental-weight coordinates.
    pub fn skew_measure(&self) -> LatticeMeasure {
        let mut m = LatticeMeasure::zero(LatticeKind::Weight, self.rs.rank);
        for (x, c) in &self.skew {
            m.add_at(self.rs.to_weight_coords(x).expect("weight"), rat_int(*c));
        }
        m
    }

    /// `J(lambda', mu'; gamma)` for `gamma` in ambient coordinates.
    pub fn volume_j(&self, gamma: &RationalVector) -> Result<Rational, VolumeError> {
        if gamma.len() != self.rs.ambient {
            return Err(VolumeError::Length { expected: self.rs.ambient, got: gamma.len() });
        }
        let scaled: Vec<Rational> = gamma.iter().map(|c| c * rat_int(self.rs.den)).collect();
        let q = scaled.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let v: Vec<i64> = scaled
            .iter()
            .map(|c| (c * Rational::from_integer(q.clone())).to_integer().to_i64().expect("coordinate fits in i64"))
            .collect();
        Ok(self.volume_j_scaled_frac(&v, q.to_i64().expect("denominator fits in i64")))
    }

    /// `J` at a scaled vector.
    pub fn volume_j_scaled(&self, x: &[i64]) -> Rational {
        self.volume_j_scaled_frac(x, 1)
    }

    /// `J` at `x / (rs.den * q)` in ambient coordinates.
    pub fn volume_j_scaled_frac(&self, x: &[i64], q: i64) -> Rational {
        let mut total = Rational::zero();
        if q == 1 && self.table.lattice_values.len() < self.skew.len() {
            if let Some(t) = self.volume_j_lattice(x) {
                return t;
            }
        }
        let on_lattice = q == 1
            && self.skew.first().is_some_and(|(p, _)| {
                let d: Vec<i64> = x.iter().zip(p).map(|(a, b)| a - b).collect();
                self.rs.in_root_lattice(&d)
            });
        let mut diff = vec![0i64; x.len()];
        for (p, c) in &self.skew {
            for ((d, a), b) in diff.iter_mut().zip(x).zip(p) {
                *d = a - q * b;
            }
            let b = if on_lattice { self.table.b_scaled(&diff) } else { self.spline.density_scaled_frac(&diff, q) };
            if !b.is_zero() {
                total += b * rat_int(*c);
            }
        }
        total
    }

    /// `J` at a lattice point by looking up the skew measure around `x`; `None`
    /// when `x` is off the shifted lattice.
    fn volume_j_lattice(&self, x: &[i64]) -> Option<Rational> {
        let (p, _) = self.skew.first()?;
        let d: Vec<i64> = x.iter().zip(p).map(|(a, b)| a - b).collect();
        if !self.rs.in_root_lattice(&d) {
            return None;
        }
        let mut total = Rational::zero();
        let mut at = vec![0i64; x.len()];
        for (tau, b) in self.support.iter() {
            for ((a, u), t) in at.iter_mut().zip(x).zip(tau) {
                *a = u - t;
            }
            if let Some(&c) = self.index.get(&at) {
                total += b * rat_int(c);
            }
        }
        Some(total)
    }

    /// `sum_{nu'} J(lambda', mu'; nu') delta_{nu'}` by discrete convolution of the
    /// root-lattice table with the skew measure, in fundamental-weight coordinates.
    pub fn volume_lattice_measure(&self) -> LatticeMeasure {
        let support = &self.support;
        let mut acc: HashMap<Vec<i64>, Rational> = HashMap::new();
        for (p, c) in &self.skew {
            let c = rat_int(*c);
            for (tau, b) in support.iter() {
                let at: Vec<i64> = p.iter().zip(tau).map(|(a, b)| a + b).collect();
                *acc.entry(at).or_insert_with(Rational::zero) += b * &c;
            }
        }
        let mut m = LatticeMeasure::zero(LatticeKind::Weight, self.rs.rank);
        for (x, v) in acc {
            m.add_at(self.rs.to_weight_coords(&x).expect("weight"), v);
        }
        m
    }
}
