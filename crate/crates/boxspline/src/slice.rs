//! Slices of the cube `[-1/2, 1/2]^m` by the fibres of `t -> A t`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use lrbox_core::linalg;
use lrbox_core::{rat_int, Rational, RationalVector};
use lrbox_rootsys::RootSystem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::BoxSplineError;
use crate::intmat;
use crate::volume::Polytope;

/// Largest kernel dimension `m - r` handled exactly.
pub const MAX_SLICE_DIM: usize = 8;

/// The linear data of one slice computation.
#[derive(Clone, Debug)]
pub struct SliceVolumeProblem {
    /// `r x m`, columns are the positive roots in simple-root coordinates.
    pub a: Vec<Vec<i64>>,
    /// Target point in simple-root coordinates.
    pub x: RationalVector,
    /// `m x (m - r)` integer kernel basis of `a`.
    pub kernel: Vec<Vec<i64>>,
}

struct TightBasis {
    rows: Vec<usize>,
    rest: Vec<usize>,
    det: i128,
    proj: Vec<Vec<i128>>,
}

/// Affine frame of a face: a kernel basis of its tight rows and the
/// coordinates onto which it projects injectively.
pub(crate) struct Frame {
    pub dim: usize,
    pub coords: Vec<usize>,
    pub basis: Vec<Vec<i128>>,
    pub det: BigInt,
}

/// Precomputed slice data for one root system, reused for every target point.
pub struct SliceGeometry {
    rank: usize,
    m: usize,
    k: usize,
    a: Vec<Vec<i64>>,
    kernel: Vec<Vec<i64>>,
    bases: Vec<TightBasis>,
    coarea: Rational,
    frames: RwLock<HashMap<u64, Arc<Frame>>>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl SliceGeometry {
    pub fn new(rs: &RootSystem) -> Result<Self, BoxSplineError> {
        let r = rs.rank;
        let m = rs.num_positive_roots();
        let k = m - r;
        if k > MAX_SLICE_DIM {
            return Err(BoxSplineError::SliceTooLarge { dim: k, max: MAX_SLICE_DIM });
        }
        let simple: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let mut cols = simple.clone();
        cols.extend(rs.positive_roots_q.iter().filter(|c| !simple.contains(c)).cloned());
        let a: Vec<Vec<i64>> = (0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let mut kernel = vec![vec![0i64; k]; m];
        for i in 0..r {
            for j in 0..k {
                kernel[i][j] = -a[i][r + j];
            }
        }
        for j in 0..k {
            kernel[r + j][j] = 1;
        }

        let mut bases = Vec::new();
        for rows in combinations(m, k) {
            let sub: linalg::Matrix = rows.iter().map(|&i| kernel[i].iter().map(|&x| rat_int(x)).collect()).collect();
            let d = linalg::det(&sub);
            if d.is_zero() {
                continue;
            }
            let inv = linalg::inverse(&sub).expect("nonzero determinant");
            let adj: Vec<Vec<i128>> =
                inv.iter().map(|row| row.iter().map(|x| (x * &d).to_integer().to_i128().unwrap()).collect()).collect();
            let det = d.to_integer().to_i128().unwrap();
            let rest: Vec<usize> = (0..m).filter(|i| !rows.contains(i)).collect();
            let proj = rest
                .iter()
                .map(|&i| (0..k).map(|j| (0..k).map(|l| kernel[i][l] as i128 * adj[l][j]).sum()).collect())
                .collect();
            bases.push(TightBasis { rows, rest, det, proj });
        }

        let mut full = vec![vec![rat_int(0); m]; m];
        for i in 0..m {
            for j in 0..r {
                full[i][j] = rat_int(a[j][i]);
            }
            for j in 0..k {
                full[i][r + j] = rat_int(kernel[i][j]);
            }
        }
        let am = linalg::from_i64(&a);
        let gram = linalg::mat_mul(&am, &linalg::transpose(&am));
        let coarea = linalg::det(&full).abs() / linalg::det(&gram);

        Ok(SliceGeometry { rank: r, m, k, a, kernel, bases, coarea, frames: RwLock::new(HashMap::new()) })
    }

    pub fn slice_dim(&self) -> usize {
        self.k
    }

    pub fn num_roots(&self) -> usize {
        self.m
    }

    /// The factor `|det [A^T N]| / det(A A^T)` turning kernel volume into density.
    pub fn coarea_factor(&self) -> &Rational {
        &self.coarea
    }

    pub fn problem(&self, x: &RationalVector) -> SliceVolumeProblem {
        SliceVolumeProblem { a: self.a.clone(), x: x.clone(), kernel: self.kernel.clone() }
    }

    pub(crate) fn num_constraints(&self) -> usize {
        2 * self.m
    }

    pub(crate) fn frame(&self, rows: u64) -> Arc<Frame> {
        if let Some(f) = self.frames.read().unwrap().get(&rows) {
            return f.clone();
        }
        let tight: Vec<Vec<i64>> = (0..self.m).filter(|i| rows >> i & 1 == 1).map(|i| self.kernel[i].clone()).collect();
        let basis = intmat::kernel_basis(&tight, self.k);
        let dim = basis.len();
        let mut coords = Vec::new();
        for c in 0..self.k {
            if coords.len() == dim {
                break;
            }
            let mut trial = coords.clone();
            trial.push(c);
            let sub: Vec<Vec<i64>> = trial.iter().map(|&i| basis.iter().map(|b| b[i] as i64).collect()).collect();
            if intmat::rank(&sub, dim) == trial.len() {
                coords = trial;
            }
        }
        let square: Vec<Vec<i128>> = coords.iter().map(|&i| basis.iter().map(|b| b[i]).collect()).collect();
        let det = intmat::det(&square).abs();
        let frame = Arc::new(Frame { dim, coords, basis, det });
        self.frames.write().unwrap().insert(rows, frame.clone());
        frame
    }

    pub(crate) fn rows_of(&self, tight: u128) -> u64 {
        (0..self.m).filter(|&i| tight >> (2 * i) & 3 != 0).fold(0u64, |acc, i| acc | 1 << i)
    }

    /// Vertices of the kernel-coordinate polytope, with a bitmask of tight constraints.
    ///
    /// Constraint `2i` is `t_i = 1/2` and `2i + 1` is `t_i = -1/2`.
    pub(crate) fn vertices(&self, x_q: &RationalVector) -> Vec<(Vec<i128>, i128, u128)> {
        let den = x_q.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom())).to_i128().unwrap();
        let mut t0 = vec![0i128; self.m];
        for i in 0..self.rank {
            t0[i] = (&x_q.coords[i] * Rational::from_integer(BigInt::from(den))).to_integer().to_i128().unwrap();
        }
        let mut found: HashMap<(Vec<i128>, i128), u128> = HashMap::new();
        let mut u = vec![0i128; self.k];
        let mut tt = vec![0i128; self.m];
        for b in &self.bases {
            let half = den * b.det.abs();
            for signs in 0u32..(1 << self.k) {
                for (j, &row) in b.rows.iter().enumerate() {
                    let s = if signs >> j & 1 == 1 { den } else { -den };
                    u[j] = s - 2 * t0[row];
                }
                let mut ok = true;
                for (p, &row) in b.proj.iter().zip(&b.rest) {
                    let v = 2 * b.det * t0[row] + p.iter().zip(&u).map(|(x, y)| x * y).sum::<i128>();
                    if v.abs() > half {
                        ok = false;
                        break;
                    }
                    tt[row] = v;
                }
                if !ok {
                    continue;
                }
                let scale = 2 * den * b.det;
                for (j, &row) in b.rows.iter().enumerate() {
                    tt[row] = if signs >> j & 1 == 1 { half } else { -half } * b.det.signum();
                }
                let mut mask = 0u128;
                for (i, &v) in tt.iter().enumerate() {
                    if v * scale.signum() == half {
                        mask |= 1 << (2 * i);
                    } else if v * scale.signum() == -half {
                        mask |= 1 << (2 * i + 1);
                    }
                }
                let mut num: Vec<i128> = tt[self.rank..].to_vec();
                let mut d = scale;
                let g = num.iter().fold(d, |acc, &v| acc.gcd(&v));
                num.iter_mut().for_each(|v| *v /= g);
                d /= g;
                if d < 0 {
                    d = -d;
                    num.iter_mut().for_each(|v| *v = -*v);
                }
                found.entry((num, d)).or_insert(mask);
            }
        }
        found.into_iter().map(|((n, d), mask)| (n, d, mask)).collect()
    }

    /// Volume of the fibre polytope in kernel coordinates.
    pub fn kernel_volume(&self, x_q: &RationalVector) -> Result<Rational, BoxSplineError> {
        if x_q.len() != self.rank {
            return Err(BoxSplineError::Length { expected: self.rank, got: x_q.len() });
        }
        let verts = self.vertices(x_q);
        if verts.is_empty() {
            return Ok(rat_int(0));
        }
        let l = verts.iter().fold(1i128, |acc, v| acc.lcm(&v.1));
        let mut pts = Vec::with_capacity(verts.len());
        let mut masks = Vec::with_capacity(verts.len());
        let mut order: Vec<_> = verts.into_iter().collect();
        order.sort();
        for (n, d, mask) in order {
            pts.push(n.iter().map(|v| v * (l / d)).collect());
            masks.push(mask);
        }
        let mut poly = Polytope::new(self, pts, masks);
        let vol = poly.volume();
        Ok(vol / Rational::from_integer(BigInt::from(l).pow(self.k as u32)))
    }

    /// Box-spline density at `x_q` (simple-root coordinates).
    pub fn density(&self, x_q: &RationalVector) -> Result<Rational, BoxSplineError> {
        Ok(self.kernel_volume(x_q)? * &self.coarea)
    }
}
