//! Kostant multiplicities and tensor-product multiplicities.

use std::collections::BTreeMap;

use lrbox_rootsys::Weight;

use crate::error::OracleError;
use crate::Oracle;

fn add(x: &[i64], y: &[i64], k: i64) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + k * b).collect()
}

impl Oracle {
    /// `Part(tau)` for `tau` in simple-root coordinates.
    pub fn kostant_partition(&self, tau: &[i64]) -> u128 {
        self.partition.count(tau)
    }

    /// `Part` of a scaled vector; fails unless it lies in the root lattice.
    pub fn kostant_partition_scaled(&self, x: &[i64]) -> Result<u128, OracleError> {
        self.partition.count_scaled(&self.rs, x)
    }

    /// `mult_lambda(mu) = sum_w eps(w) Part(w(lambda') - mu')`.
    pub fn weight_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64, OracleError> {
        self.check_dominant(lambda)?;
        self.weight_multiplicity_scaled(lambda, &self.rs.weight_vector(mu))
    }

    /// Kostant multiplicity of the scaled weight `mu`.
    pub fn weight_multiplicity_scaled(&self, lambda: &Weight, mu: &[i64]) -> Result<u64, OracleError> {
        self.check_dominant(lambda)?;
        let lp = self.rs.shifted(lambda);
        let mp = add(mu, &self.rs.rho, 1);
        if !self.rs.in_root_lattice(&add(&lp, &mp, -1)) {
            return Ok(0);
        }
        let mut total: i128 = 0;
        for w in self.rs.weyl() {
            let v = add(&w.apply_i64(&lp), &mp, -1);
            let q = self.rs.to_root_coords(&v).expect("difference stays in the root lattice");
            total += w.sign as i128 * self.partition.count(&q) as i128;
        }
        assert!(total >= 0);
        Ok(total as u64)
    }

    /// Kostant-Steinberg: `sum_{w,w'} eps(ww') Part(w(lambda') + w'(mu') - nu' - rho)`.
    pub fn lr_coefficient(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64, OracleError> {
        for w in [lambda, mu, nu] {
            self.check_dominant(w)?;
        }
        if !self.rs.compatible(lambda, mu, nu) {
            return Ok(0);
        }
        let rs = &self.rs;
        let den = rs.root_coords_den();
        let lw: Vec<(i8, Vec<i64>)> =
            rs.weyl().iter().map(|w| (w.sign, rs.root_coords_numer(&w.apply_i64(&rs.shifted(lambda))))).collect();
        let mw: Vec<(i8, Vec<i64>)> =
            rs.weyl().iter().map(|w| (w.sign, rs.root_coords_numer(&w.apply_i64(&rs.shifted(mu))))).collect();
        let base = rs.root_coords_numer(&add(&rs.shifted(nu), &rs.rho, 1));
        let mut total: i128 = 0;
        let mut q = vec![0i64; rs.rank];
        for (s1, a) in &lw {
            for (s2, b) in &mw {
                let mut neg = false;
                for i in 0..rs.rank {
                    let v = a[i] + b[i] - base[i];
                    if v < 0 {
                        neg = true;
                        break;
                    }
                    debug_assert_eq!(v % den, 0);
                    q[i] = v / den;
                }
                if !neg {
                    total += (*s1 * *s2) as i128 * self.partition.count(&q) as i128;
                }
            }
        }
        assert!(total >= 0);
        Ok(total as u64)
    }

    /// `C_{lambda mu}^nu = sum_w eps(w) mult_lambda(nu' - w(mu'))`.
    ///
    /// The argument order inside `mult` matters for systems where `-1` is not
    /// in the Weyl group (type A, D odd rank).
    pub fn lr_from_multiplicities(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64, OracleError> {
        for w in [lambda, mu, nu] {
            self.check_dominant(w)?;
        }
        let ch = self.character(lambda)?;
        let np = self.rs.shifted(nu);
        let mp = self.rs.shifted(mu);
        let mut total: i64 = 0;
        for w in self.rs.weyl() {
            total += w.sign as i64 * ch.mult(&add(&np, &w.apply_i64(&mp), -1)) as i64;
        }
        assert!(total >= 0);
        Ok(total as u64)
    }

    /// The literal form `sum_w eps(w) mult_lambda(w(mu') - nu')`, kept for comparison.
    pub fn lr_from_multiplicities_literal(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<i64, OracleError> {
        let ch = self.character(lambda)?;
        let np = self.rs.shifted(nu);
        let mp = self.rs.shifted(mu);
        Ok(self.rs.weyl().iter().map(|w| w.sign as i64 * ch.mult(&add(&w.apply_i64(&mp), &np, -1)) as i64).sum())
    }

    /// Full decomposition of `V_lambda (x) V_mu` by the Brauer-Klimyk rule.
    pub fn tensor_decomposition(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>, OracleError> {
        self.check_dominant(mu)?;
        let ch = self.character(lambda)?;
        let mp = self.rs.shifted(mu);
        let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (beta, &m) in &ch.weights {
            let (xp, eps) = self.rs.dominant_scaled(&add(beta, &mp, 1));
            if eps != 0 {
                *acc.entry(add(&xp, &self.rs.rho, -1)).or_insert(0) += eps as i64 * m as i64;
            }
        }
        let mut out = BTreeMap::new();
        for (v, c) in acc {
            assert!(c >= 0, "negative tensor multiplicity");
            if c > 0 {
                out.insert(Weight::new(self.rs.to_weight_coords(&v).unwrap()), c as u64);
            }
        }
        Ok(out)
    }

    /// `C_{lambda mu kappa}^nu = sum_tau C_{lambda mu}^tau C_{tau kappa}^nu`.
    pub fn triple_multiplicity(&self, lambda: &Weight, mu: &Weight, kappa: &Weight, nu: &Weight) -> Result<u64, OracleError> {
        self.check_dominant(nu)?;
        let mut total = 0u64;
        for (tau, c) in self.tensor_decomposition(lambda, mu)? {
            let c2 = self.tensor_decomposition(&tau, kappa)?.get(nu).copied().unwrap_or(0);
            total += c * c2;
        }
        Ok(total)
    }

    /// Signed extension of `C_{lambda mu}^.` to the shifted lattice `lambda + mu + rho + Q`.
    ///
    /// Returns `eps(w) C_{lambda mu}^tau` when `xi = w(tau')` with `tau` dominant,
    /// and 0 when `xi` lies on a wall.
    pub fn skew_multiplicity(&self, lambda: &Weight, mu: &Weight, xi: &[i64]) -> Result<i64, OracleError> {
        self.check_dominant(lambda)?;
        self.check_dominant(mu)?;
        let base = add(&add(&self.rs.weight_vector(lambda), &self.rs.weight_vector(mu), 1), &self.rs.rho, 1);
        if !self.rs.in_root_lattice(&add(xi, &base, -1)) {
            return Err(OracleError::LatticeMismatch);
        }
        let (xp, eps) = self.rs.dominant_scaled(xi);
        if eps == 0 {
            return Ok(0);
        }
        let tau = Weight::new(self.rs.to_weight_coords(&add(&xp, &self.rs.rho, -1)).unwrap());
        Ok(eps as i64 * self.lr_coefficient(lambda, mu, &tau)? as i64)
    }

    /// Checks `mult_lambda(mu) = C_{lambda, k rho}^{mu + k rho}`.
    ///
    /// `rho` always has fundamental-weight coordinates 1, so `k rho` is a weight for every `k`.
    pub fn mult_degeneration_check(&self, lambda: &Weight, mu: &Weight, k: i64) -> Result<bool, OracleError> {
        let krho = Weight::new(vec![k; self.rs.rank]);
        let target = mu.add(&krho);
        let lhs = self.weight_multiplicity(lambda, mu)?;
        if !target.is_dominant() {
            return Ok(lhs == 0);
        }
        Ok(lhs == self.lr_coefficient(lambda, &krho, &target)?)
    }

    /// Smallest `k <= k_max` from which the degeneration identity holds up to `k_max`.
    pub fn degeneration_threshold(&self, lambda: &Weight, mu: &Weight, k_max: i64) -> Result<Option<i64>, OracleError> {
        let mut first = None;
        for k in 0..=k_max {
            if self.mult_degeneration_check(lambda, mu, k)? {
                first.get_or_insert(k);
            } else {
                first = None;
            }
        }
        Ok(first)
    }
}
