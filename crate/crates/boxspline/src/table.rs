use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use lrbox_core::{rat_int, LatticeKind, LatticeMeasure, Rational};
use lrbox_rootsys::{RootSystem, Weight};
use rayon::prelude::*;

use crate::spline::BoxSpline;

/// Values of `b` on the root lattice together with the coefficients `r_kappa`.
///
/// Lattice points are keyed by simple-root coordinates.
#[derive(Clone, Debug)]
pub struct BoxSplineTable {
    pub root_system: Arc<RootSystem>,
    pub lattice_values: LatticeMeasure,
    /// `r_kappa` keyed by `kappa` in fundamental-weight coordinates.
    pub r_coeffs: BTreeMap<Weight, Rational>,
    /// Dominant root-lattice points strictly inside the hull of `W rho`, as scaled vectors.
    pub k_points: Vec<Vec<i64>>,
}

impl BoxSplineTable {
    /// `b(tau)` for `tau` in simple-root coordinates.
    pub fn b(&self, tau_q: &[i64]) -> Rational {
        self.lattice_values.get(tau_q)
    }

    /// `b(x)` for a scaled root-lattice vector, zero off the lattice.
    pub fn b_scaled(&self, x: &[i64]) -> Rational {
        match self.root_system.to_root_coords(x) {
            Some(c) => self.b(&c),
            None => rat_int(0),
        }
    }

    /// The support as scaled vectors with their values.
    pub fn support_scaled(&self) -> Vec<(Vec<i64>, Rational)> {
        self.lattice_values.iter().map(|(c, v)| (self.root_system.from_root_coords(c), v.clone())).collect()
    }

    pub fn total(&self) -> Rational {
        self.lattice_values.mass()
    }

    /// `K` in fundamental-weight coordinates, in the order of `k_points`.
    pub fn k_weights(&self) -> Vec<Weight> {
        self.k_points.iter().map(|k| Weight::new(self.root_system.to_weight_coords(k).expect("weight"))).collect()
    }

    pub fn to_json(&self) -> String {
        self.lattice_values.to_json()
    }
}

/// Evaluates `b` on `Q` inside the hull of `W rho` and derives `r_kappa`.
pub fn lattice_table(bs: &BoxSpline) -> BoxSplineTable {
    let rs = bs.root_system().clone();
    let dominant = rs.dominant_root_points_in_rho_hull(false);
    let values: Vec<(Vec<i64>, Rational)> = dominant.par_iter().map(|p| (p.clone(), bs.density_scaled(p))).collect();

    let mut lattice_values = LatticeMeasure::zero(LatticeKind::Root, rs.rank);
    for (p, b) in &values {
        let orbit: BTreeSet<Vec<i64>> = rs.weyl().iter().map(|w| w.apply_i64(p)).collect();
        for x in orbit {
            lattice_values.add_at(rs.to_root_coords(&x).expect("root lattice point"), b.clone());
        }
    }

    let k_points = rs.dominant_root_points_in_rho_hull(true);
    let mut r_coeffs = BTreeMap::new();
    for kappa in &k_points {
        let shifted: Vec<i64> = kappa.iter().zip(&rs.rho).map(|(a, b)| a + b).collect();
        let mut r = rat_int(0);
        for w in rs.weyl() {
            let wr = w.apply_i64(&rs.rho);
            let diff: Vec<i64> = shifted.iter().zip(&wr).map(|(a, b)| a - b).collect();
            let c = rs.to_root_coords(&diff).expect("kappa' - w(rho) lies in Q");
            let b = lattice_values.get(&c);
            if w.sign > 0 {
                r += b;
            } else {
                r -= b;
            }
        }
        let weight = Weight::new(rs.to_weight_coords(kappa).expect("root lattice point is a weight"));
        r_coeffs.insert(weight, r);
    }

    BoxSplineTable { root_system: rs, lattice_values, r_coeffs, k_points }
}
