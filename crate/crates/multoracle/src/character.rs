//! Irreducible characters by the Freudenthal recursion.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use lrbox_rootsys::{RootSystem, Weight};
use num_complex::Complex64;

use crate::error::OracleError;
use crate::Oracle;

/// All weights of an irreducible representation with multiplicities.
#[derive(Clone, Debug)]
pub struct Character {
    pub highest: Weight,
    /// Dominant weights (scaled `e`-coordinates) and their multiplicities.
    pub dominant: BTreeMap<Vec<i64>, u64>,
    /// Every weight (scaled `e`-coordinates) with its multiplicity.
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl Character {
    pub fn dimension(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn mult(&self, x: &[i64]) -> u64 {
        self.weights.get(x).copied().unwrap_or(0)
    }
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn add(x: &[i64], y: &[i64], k: i64) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + k * b).collect()
}

pub(crate) fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Character {
    let top = rs.weight_vector(lambda);
    let lr = add(&top, &rs.rho, 1);
    let norm_lr = dot(&lr, &lr);
    // Dominant weights below lambda, grouped by depth in simple-root coordinates.
    let mut levels: Vec<Vec<Vec<i64>>> = vec![vec![top.clone()]];
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    seen.insert(top.clone(), ());
    loop {
        let mut next = Vec::new();
        for mu in levels.last().unwrap() {
            for a in &rs.simple_roots {
                let nu = add(mu, a, -1);
                if rs.is_dominant_scaled(&nu) && !seen.contains_key(&nu) {
                    seen.insert(nu.clone(), ());
                    next.push(nu);
                }
            }
        }
        // A dominant weight may be reachable only through non-dominant ones, so
        // also try subtracting positive roots from every dominant weight found so far.
        for lvl in &levels {
            for mu in lvl {
                for a in &rs.positive_roots {
                    let nu = add(mu, a, -1);
                    if rs.is_dominant_scaled(&nu) && !seen.contains_key(&nu) {
                        seen.insert(nu.clone(), ());
                        next.push(nu);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let mut all: Vec<Vec<i64>> = seen.into_keys().collect();
    let height = |v: &Vec<i64>| -> i64 { rs.root_coords_numer(&add(&top, v, -1)).iter().sum() };
    all.sort_by_key(|v| (height(v), v.clone()));

    let mut dominant: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let lookup = |dom: &BTreeMap<Vec<i64>, u64>, x: &[i64]| -> u64 {
        let (xp, _) = rs.dominant_scaled(x);
        dom.get(&xp).copied().unwrap_or(0)
    };
    for mu in all {
        if mu == top {
            dominant.insert(mu, 1);
            continue;
        }
        let mr = add(&mu, &rs.rho, 1);
        let denom = norm_lr - dot(&mr, &mr);
        let mut num = 0i64;
        for a in &rs.positive_roots {
            let mut k = 1;
            loop {
                let x = add(&mu, a, k);
                let m = lookup(&dominant, &x);
                if m == 0 {
                    break;
                }
                num += 2 * m as i64 * dot(&x, a);
                k += 1;
            }
        }
        assert!(denom > 0 && num % denom == 0, "Freudenthal recursion produced a non-integer");
        let m = (num / denom) as u64;
        if m > 0 {
            dominant.insert(mu, m);
        }
    }
    let mut weights = BTreeMap::new();
    for (mu, &m) in &dominant {
        for w in rs.weyl() {
            weights.insert(w.apply_i64(mu), m);
        }
    }
    Character { highest: lambda.clone(), dominant, weights }
}

impl Oracle {
    /// Cached character of `V_lambda`.
    pub fn character(&self, lambda: &Weight) -> Result<Arc<Character>, OracleError> {
        self.check_dominant(lambda)?;
        if let Some(c) = self.characters.read().unwrap().get(&lambda.coords) {
            return Ok(c.clone());
        }
        let c = Arc::new(freudenthal(&self.rs, lambda));
        self.characters.write().unwrap().insert(lambda.coords.clone(), c.clone());
        Ok(c)
    }

    /// Multiplicity by the Freudenthal recursion.
    pub fn freudenthal_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64, OracleError> {
        Ok(self.character(lambda)?.mult(&self.rs.weight_vector(mu)))
    }

    /// `dim V_lambda` by the Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> u128 {
        let lr = self.rs.shifted(lambda);
        let mut num = lrbox_core::rat_int(1);
        for a in &self.rs.positive_roots {
            num *= lrbox_core::rat(dot(&lr, a), dot(&self.rs.rho, a));
        }
        assert!(num.is_integer());
        num.to_integer().try_into().expect("dimension fits in u128")
    }

    /// `chi_lambda(e^{ix}) = sum_beta mult(beta) e^{i <beta, x>}` for `x` in actual `e`-coordinates.
    pub fn character_value(&self, lambda: &Weight, x: &[f64]) -> Result<Complex64, OracleError> {
        let ch = self.character(lambda)?;
        let mut s = Complex64::new(0.0, 0.0);
        for (beta, &m) in &ch.weights {
            let phase = self.rs.ip_f64(&self.rs.scaled_to_f64(beta), x);
            s += Complex64::from_polar(m as f64, phase);
        }
        Ok(s)
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<(), OracleError> {
        if w.coords.len() != self.rs.rank {
            return Err(OracleError::Length { expected: self.rs.rank, got: w.coords.len() });
        }
        if !w.is_dominant() {
            return Err(OracleError::NotDominant(w.coords.clone()));
        }
        Ok(())
    }
}
