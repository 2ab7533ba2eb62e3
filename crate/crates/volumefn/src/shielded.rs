//! The Duistermaat-Heckman arrangement in the third argument and shielded triples.

use lrbox_core::{rat, Rational, RationalVector};
use lrbox_multoracle::Oracle;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use lrbox_rootsys::{RootSystem, RootType, Weight};

use crate::error::VolumeError;

/// Hyperplanes `<normal, gamma> = offset` for fixed first two arguments, one per
/// subset triple `(I, J, K)`.
#[derive(Clone, Debug)]
pub struct HyperplaneArrangement {
    pub hyperplanes: Vec<(RationalVector, Rational)>,
    /// The same hyperplanes in scaled integer form `(indicator of K, offset * den)`.
    scaled: Vec<(Vec<i64>, i64)>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

impl HyperplaneArrangement {
    /// `sum_K gamma_k = sum_I a_i + sum_J b_j` for `|I| = |J| = |K|` in `1..n-1`,
    /// with `a`, `b` scaled `e`-coordinates.
    pub fn duistermaat_heckman(rs: &RootSystem, a: &[i64], b: &[i64]) -> Result<Self, VolumeError> {
        if rs.kind != RootType::A {
            return Err(VolumeError::NotTypeA(rs.label()));
        }
        let n = rs.ambient;
        let mut scaled: Vec<(Vec<i64>, i64)> = Vec::new();
        for k in 1..n {
            let subs = subsets(n, k);
            for ii in &subs {
                let sa: i64 = ii.iter().map(|&i| a[i]).sum();
                for jj in &subs {
                    let sb: i64 = jj.iter().map(|&j| b[j]).sum();
                    for kk in &subs {
                        let mut normal = vec![0i64; n];
                        kk.iter().for_each(|&i| normal[i] = 1);
                        scaled.push((normal, sa + sb));
                    }
                }
            }
        }
        let hyperplanes = scaled
            .iter()
            .map(|(nrm, off)| (RationalVector::from_ints(nrm), rat(*off, rs.den)))
            .collect();
        Ok(HyperplaneArrangement { hyperplanes, scaled })
    }

    /// `sum_K beta_k = sum_I a_i` for `|I| = |K|` in `1..n-1`, the walls of the
    /// Duistermaat-Heckman density of the orbit through `a` (scaled).
    pub fn weight_slices(rs: &RootSystem, a: &[i64]) -> Result<Self, VolumeError> {
        if rs.kind != RootType::A {
            return Err(VolumeError::NotTypeA(rs.label()));
        }
        let n = rs.ambient;
        let mut scaled: Vec<(Vec<i64>, i64)> = Vec::new();
        for k in 1..n {
            let subs = subsets(n, k);
            for ii in &subs {
                let sa: i64 = ii.iter().map(|&i| a[i]).sum();
                for kk in &subs {
                    let mut normal = vec![0i64; n];
                    kk.iter().for_each(|&i| normal[i] = 1);
                    scaled.push((normal, sa));
                }
            }
        }
        let hyperplanes = scaled
            .iter()
            .map(|(nrm, off)| (RationalVector::from_ints(nrm), rat(*off, rs.den)))
            .collect();
        Ok(HyperplaneArrangement { hyperplanes, scaled })
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Sign of `<normal, x> - offset` for a scaled point, per hyperplane.
    pub fn signs_scaled(&self, x: &[i64]) -> Vec<i8> {
        self.scaled
            .iter()
            .map(|(nrm, off)| {
                let v: i64 = nrm.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() - off;
                v.signum() as i8
            })
            .collect()
    }

    /// True if every point lies strictly on one common side of every hyperplane.
    pub fn separates_none_scaled(&self, points: &[Vec<i64>]) -> bool {
        let Some(first) = points.first() else { return true };
        let s0 = self.signs_scaled(first);
        if s0.contains(&0) {
            return false;
        }
        points[1..].iter().all(|p| self.signs_scaled(p) == s0)
    }
}

/// The stencil `nu' + floor(d/2) w(rho)` as scaled vectors.
pub fn shielding_stencil(rs: &RootSystem, nu: &Weight) -> Vec<Vec<i64>> {
    let k = (rs.d() / 2) as i64;
    let nup = rs.shifted(nu);
    rs.weyl()
        .iter()
        .map(|w| w.apply_i64(&rs.rho).iter().zip(&nup).map(|(r, n)| n + k * r).collect())
        .collect()
}

/// True if the stencil around `nu'` is dominant and meets no hyperplane of the
/// arrangement for `(lambda', mu')`.
pub fn shielded_test(rs: &RootSystem, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<bool, VolumeError> {
    if rs.kind != RootType::A {
        return Err(VolumeError::NotTypeA(rs.label()));
    }
    if !rs.compatible(lambda, mu, nu) {
        return Err(VolumeError::Incompatible { lambda: lambda.coords.clone(), mu: mu.coords.clone(), nu: nu.coords.clone() });
    }
    let stencil = shielding_stencil(rs, nu);
    if !stencil.iter().all(|p| rs.is_dominant_scaled(p)) {
        return Ok(false);
    }
    let arr = HyperplaneArrangement::duistermaat_heckman(rs, &rs.shifted(lambda), &rs.shifted(mu))?;
    Ok(arr.separates_none_scaled(&stencil))
}

/// Deterministic sample of shielded triples with nonzero LR coefficient.
///
/// `lambda` and `mu` have coordinates in `scale/2..=scale`; each pair
/// contributes at most `per_pair` triples. Gives up after `max_pairs` pairs.
pub fn sample_shielded_triples(
    oracle: &Oracle,
    count: usize,
    scale: i64,
    per_pair: usize,
    max_pairs: usize,
    seed: u64,
) -> Result<Vec<(Weight, Weight, Weight, u64)>, VolumeError> {
    let rs = oracle.root_system().clone();
    if rs.kind != RootType::A {
        return Err(VolumeError::NotTypeA(rs.label()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..max_pairs {
        if out.len() >= count {
            break;
        }
        let lambda = Weight::new((0..rs.rank).map(|_| rng.gen_range(scale / 2..=scale)).collect());
        let mu = Weight::new((0..rs.rank).map(|_| rng.gen_range(scale / 2..=scale)).collect());
        let top = rs.weight_vector(&lambda.add(&mu));
        let mut taken = 0;
        for _ in 0..2000 {
            if taken >= per_pair || out.len() >= count {
                break;
            }
            let c: Vec<i64> = (0..rs.rank).map(|_| rng.gen_range(0..=3 * scale)).collect();
            let v: Vec<i64> = top.iter().zip(&rs.from_root_coords(&c)).map(|(a, b)| a - b).collect();
            if !rs.is_dominant_scaled(&v) {
                continue;
            }
            let nu = Weight::new(rs.to_weight_coords(&v).expect("weight"));
            if out.iter().any(|(l, m, n, _)| *l == lambda && *m == mu && *n == nu) || !shielded_test(&rs, &lambda, &mu, &nu)? {
                continue;
            }
            let c = oracle.lr_coefficient(&lambda, &mu, &nu)?;
            if c > 0 {
                out.push((lambda.clone(), mu.clone(), nu, c));
                taken += 1;
            }
        }
    }
    Ok(out)
}

/// Shielded triples `(lambda, mu, lambda + delta)` with `delta` a weight of `V_mu`.
///
/// Intended for `lambda` far from the walls compared with `mu`, where the only
/// hyperplanes near `nu'` are those with `I = K`. Weights `delta` are drawn from
/// the character of `mu` with scaled coordinates bounded by `radius`, and
/// `C_{lambda mu}^nu` is computed from that character.
pub fn sample_shielded_near(
    oracle: &Oracle,
    lambda: &Weight,
    mu: &Weight,
    count: usize,
    radius: i64,
    seed: u64,
) -> Result<Vec<(Weight, Weight, Weight, u64)>, VolumeError> {
    let rs = oracle.root_system().clone();
    if rs.kind != RootType::A {
        return Err(VolumeError::NotTypeA(rs.label()));
    }
    let ch = oracle.character(mu)?;
    let mut deltas: Vec<&Vec<i64>> = ch.weights.keys().filter(|d| d.iter().all(|x| x.abs() <= radius)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    deltas.shuffle(&mut rng);
    let base = rs.weight_vector(lambda);
    let mut out = Vec::new();
    for delta in deltas {
        if out.len() >= count {
            break;
        }
        let v: Vec<i64> = base.iter().zip(delta).map(|(a, b)| a + b).collect();
        if !rs.is_dominant_scaled(&v) {
            continue;
        }
        let nu = Weight::new(rs.to_weight_coords(&v).expect("weight"));
        if !shielded_test(&rs, lambda, mu, &nu)? {
            continue;
        }
        let c = oracle.lr_from_multiplicities(mu, lambda, &nu)?;
        if c > 0 {
            out.push((lambda.clone(), mu.clone(), nu, c));
        }
    }
    Ok(out)
}
