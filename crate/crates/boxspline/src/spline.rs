use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use lrbox_core::{Rational, RationalVector};
use lrbox_rootsys::RootSystem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::BoxSplineError;
use crate::slice::SliceGeometry;

/// The box spline density of one root system with a value cache.
pub struct BoxSpline {
    rs: Arc<RootSystem>,
    geom: SliceGeometry,
    cache: RwLock<HashMap<(Vec<i64>, i64), Rational>>,
}

impl BoxSpline {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self, BoxSplineError> {
        let geom = SliceGeometry::new(&rs)?;
        Ok(BoxSpline { rs, geom, cache: RwLock::new(HashMap::new()) })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn geometry(&self) -> &SliceGeometry {
        &self.geom
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// Density at a point given in ambient coordinates.
    pub fn density(&self, x: &RationalVector) -> Result<Rational, BoxSplineError> {
        if x.len() != self.rs.ambient {
            return Err(BoxSplineError::Length { expected: self.rs.ambient, got: x.len() });
        }
        let scaled: Vec<Rational> = x.iter().map(|c| c * Rational::from_integer(BigInt::from(self.rs.den))).collect();
        let q = scaled.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let v: Vec<i64> = scaled
            .iter()
            .map(|c| (c * Rational::from_integer(q.clone())).to_integer().to_i64().expect("coordinate fits in i64"))
            .collect();
        Ok(self.density_scaled_frac(&v, q.to_i64().expect("denominator fits in i64")))
    }

    /// Density at a point given in simple-root coordinates.
    pub fn density_root_coords(&self, c: &RationalVector) -> Result<Rational, BoxSplineError> {
        if c.len() != self.rs.rank {
            return Err(BoxSplineError::Length { expected: self.rs.rank, got: c.len() });
        }
        self.density(&self.rs.from_root_coords_rat(c))
    }

    /// Density at a scaled lattice vector (ambient coordinates times `rs.den`).
    pub fn density_scaled(&self, x: &[i64]) -> Rational {
        self.density_scaled_frac(x, 1)
    }

    /// Density at `x / (rs.den * q)` in ambient coordinates.
    pub fn density_scaled_frac(&self, x: &[i64], q: i64) -> Rational {
        let g = x.iter().fold(q, |acc, v| acc.gcd(v));
        let (v, q): (Vec<i64>, i64) = (x.iter().map(|c| c / g).collect(), q / g);
        let (dom, _) = self.rs.dominant_scaled(&v);
        let key = (dom, q);
        if let Some(b) = self.cache.read().unwrap().get(&key) {
            return b.clone();
        }
        // Outside the hull of W rho the density vanishes.
        let gap: Vec<i64> = self.rs.rho.iter().zip(&key.0).map(|(r, x)| q * r - x).collect();
        if self.rs.root_coords_numer(&gap).iter().any(|&c| c < 0) {
            return Rational::from_integer(0.into());
        }
        // A1 jumps at the ends of its support; take the midpoint value there.
        if self.rs.rank == 1 && gap.iter().all(|&c| c == 0) {
            return Rational::new(1.into(), 2.into());
        }
        let numer = self.rs.root_coords_numer(&key.0);
        let den = self.rs.root_coords_den() * q;
        let xq = RationalVector::new(numer.iter().map(|&n| Rational::new(n.into(), den.into())).collect());
        let b = self.geom.density(&xq).expect("dimension checked");
        self.cache.write().unwrap().insert(key, b.clone());
        b
    }
}
