//! Kostant partition function by memoized dynamic programming.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use lrbox_rootsys::RootSystem;

use crate::error::OracleError;

pub struct KostantPartition {
    /// Positive roots in simple-root coordinates, simple roots first.
    roots: Vec<Vec<i64>>,
    rank: usize,
    memo: RwLock<HashMap<(usize, Vec<i64>), u128>>,
}

impl KostantPartition {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let mut roots: Vec<Vec<i64>> = rs.positive_roots_q.clone();
        roots.sort_by_key(|q| (q.iter().sum::<i64>(), std::cmp::Reverse(q.clone())));
        Self { roots, rank: rs.rank, memo: RwLock::new(HashMap::new()) }
    }

    /// Number of ways to write `tau` (simple-root coordinates) as a sum of positive roots.
    pub fn count(&self, tau: &[i64]) -> u128 {
        self.count_with(self.roots.len(), tau)
    }

    /// Like [`count`](Self::count) but for a scaled `e`-coordinate vector.
    pub fn count_scaled(&self, rs: &RootSystem, x: &[i64]) -> Result<u128, OracleError> {
        let q = rs.to_root_coords(x).ok_or(OracleError::NotInRootLattice)?;
        Ok(self.count(&q))
    }

    fn count_with(&self, k: usize, tau: &[i64]) -> u128 {
        if tau.iter().any(|&c| c < 0) {
            return 0;
        }
        if k == self.rank {
            // Only the simple roots remain: the decomposition is unique.
            return 1;
        }
        if let Some(&v) = self.memo.read().unwrap().get(&(k, tau.to_vec())) {
            return v;
        }
        let a = &self.roots[k - 1];
        let mut total = 0u128;
        let mut cur = tau.to_vec();
        loop {
            total += self.count_with(k - 1, &cur);
            for (c, x) in cur.iter_mut().zip(a) {
                *c -= x;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.memo.write().unwrap().insert((k, tau.to_vec()), total);
        total
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }
}
