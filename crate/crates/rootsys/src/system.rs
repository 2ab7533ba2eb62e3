use std::fmt;
use std::str::FromStr;

use lrbox_core::linalg::{self, Matrix};
use lrbox_core::{rat, rat_int, Rational, RationalVector};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::RootError;
use crate::weyl::{enumerate, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

/// A weight given by its coordinates in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self { coords: vec![0; rank] }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * k).collect())
    }
}

/// Rational linear map from scaled `e`-coordinates to integer lattice coordinates.
#[derive(Clone, Debug)]
struct CoordMap {
    num: Vec<Vec<i64>>,
    den: i64,
}

impl CoordMap {
    fn from_rational(m: &[Vec<Rational>]) -> Self {
        let mut den = num_bigint::BigInt::one();
        for row in m {
            for x in row {
                den = num_integer::lcm(den, x.denom().clone());
            }
        }
        let d = Rational::from_integer(den.clone());
        let num = m
            .iter()
            .map(|row| row.iter().map(|x| (x * &d).to_integer().to_i64().expect("small coordinate map")).collect())
            .collect();
        Self { num, den: den.to_i64().expect("small denominator") }
    }

    fn apply(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.num
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
                (s % self.den == 0).then_some(s / self.den)
            })
            .collect()
    }

    fn apply_rat(&self, x: &[Rational]) -> Vec<Rational> {
        self.num
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, b)| b * rat_int(a)).sum::<Rational>() / rat_int(self.den))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: RootType,
    pub rank: usize,
    /// Dimension of the ambient `e`-coordinate space.
    pub ambient: usize,
    /// Scale factor: stored integer vectors equal `den` times actual coordinates.
    pub den: i64,
    /// `<x, y> = ip_scale * sum x_i y_i` on actual coordinates.
    pub ip_scale: Rational,
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive roots in the simple-root basis.
    pub positive_roots_q: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Vec<i64>>,
    pub rho: Vec<i64>,
    /// Gram matrix of the simple roots.
    pub gram: Matrix,
    /// Cartan matrix `a_ij = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    weyl: Vec<WeylElement>,
    simple_reflections: Vec<WeylElement>,
    longest: usize,
    to_q: CoordMap,
    to_p: CoordMap,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for RootSystem {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let t = s.trim();
        let mut chars = t.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootType::A,
            Some('B') => RootType::B,
            Some('C') => RootType::C,
            Some('D') => RootType::D,
            _ => return Err(RootError::Parse(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| RootError::Parse(s.to_string()))?;
        RootSystem::build(kind, rank)
    }
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn combine(a: &[i64], b: &[i64], sb: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + sb * y).collect()
}

impl RootSystem {
    /// Largest supported rank per type, keeping `|W|` below about 50,000.
    pub fn max_rank(kind: RootType) -> usize {
        match kind {
            RootType::A => 7,
            RootType::B | RootType::C | RootType::D => 6,
        }
    }

    pub fn build(kind: RootType, rank: usize) -> Result<Self, RootError> {
        let min = match kind {
            RootType::A => 1,
            RootType::B | RootType::C => 2,
            RootType::D => 3,
        };
        if rank < min || rank > Self::max_rank(kind) {
            return Err(RootError::Unsupported(format!("{kind:?}{rank}")));
        }
        let (ambient, den, ip_scale) = match kind {
            RootType::A => (rank + 1, rank as i64 + 1, Rational::one()),
            RootType::B | RootType::D => (rank, 2, Rational::one()),
            RootType::C => (rank, 1, rat(1, 2)),
        };
        let n = ambient;
        let e = |i: usize| unit(n, i, den);
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(combine(&e(i), &e(j), -1));
                if kind != RootType::A {
                    positive.push(combine(&e(i), &e(j), 1));
                }
            }
            match kind {
                RootType::B => positive.push(e(i)),
                RootType::C => positive.push(unit(n, i, 2 * den)),
                _ => {}
            }
        }
        let mut simple: Vec<Vec<i64>> = (0..rank.min(n - 1)).map(|i| combine(&e(i), &e(i + 1), -1)).collect();
        match kind {
            RootType::A => {}
            RootType::B => simple.push(e(n - 1)),
            RootType::C => simple.push(unit(n, n - 1, 2 * den)),
            RootType::D => {
                simple.truncate(rank - 1);
                simple.push(combine(&e(n - 2), &e(n - 1), 1));
            }
        }
        let weyl = match kind {
            RootType::A => enumerate(n, false, false),
            RootType::B | RootType::C => enumerate(n, true, false),
            RootType::D => enumerate(n, true, true),
        };

        let ip = |x: &[i64], y: &[i64]| -> Rational {
            let s: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
            rat(s, den * den) * &ip_scale
        };
        let gram: Matrix = simple.iter().map(|a| simple.iter().map(|b| ip(a, b)).collect()).collect();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|ai| {
                simple
                    .iter()
                    .map(|aj| {
                        let v = ip(aj, ai) * rat_int(2) / ip(ai, ai);
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();

        // Coordinates in the simple-root basis: c = G^{-1} (<alpha_i, x>)_i.
        let ginv = linalg::inverse(&gram).expect("simple roots are independent");
        let pair_rows: Matrix = simple
            .iter()
            .map(|a| a.iter().map(|&v| rat(v, den * den) * &ip_scale).collect())
            .collect();
        let to_q = CoordMap::from_rational(&linalg::mat_mul(&ginv, &pair_rows));
        // Fundamental-weight coordinates: 2 <x, alpha_i> / <alpha_i, alpha_i>.
        let p_rows: Matrix = simple
            .iter()
            .zip(&pair_rows)
            .map(|(a, row)| {
                let norm = ip(a, a);
                row.iter().map(|x| x * rat_int(2) / &norm).collect()
            })
            .collect();
        let to_p = CoordMap::from_rational(&p_rows);

        // omega_i = sum_k X_ik alpha_k with X = (A^T)^{-1}.
        let cartan_t: Matrix = (0..rank).map(|k| (0..rank).map(|j| rat_int(cartan[j][k])).collect()).collect();
        let x = linalg::inverse(&cartan_t).expect("Cartan matrix is invertible");
        let fundamental: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..n)
                    .map(|c| {
                        let v: Rational = (0..rank).map(|k| &x[i][k] * rat_int(simple[k][c])).sum();
                        assert!(v.is_integer(), "fundamental weight not integral at scale {den}");
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let mut rho2 = vec![0i64; n];
        for a in &positive {
            for (r, v) in rho2.iter_mut().zip(a) {
                *r += v;
            }
        }
        assert!(rho2.iter().all(|v| v % 2 == 0));
        let rho: Vec<i64> = rho2.iter().map(|v| v / 2).collect();

        let mut rs = RootSystem {
            kind,
            rank,
            ambient: n,
            den,
            ip_scale,
            positive_roots_q: Vec::new(),
            positive_roots: positive,
            simple_roots: simple,
            fundamental_weights: fundamental,
            rho,
            gram,
            cartan,
            weyl,
            simple_reflections: Vec::new(),
            longest: 0,
            to_q,
            to_p,
        };
        rs.positive_roots_q = rs.positive_roots.iter().map(|a| rs.to_root_coords(a).unwrap()).collect();
        let neg_rho: Vec<i64> = rs.rho.iter().map(|v| -v).collect();
        rs.longest = rs.weyl.iter().position(|w| w.apply_i64(&rs.rho) == neg_rho).unwrap();
        rs.simple_reflections = rs
            .simple_roots
            .clone()
            .iter()
            .map(|a| {
                let img: Vec<i64> = rs.reflect(a, &rs.rho);
                rs.weyl.iter().find(|w| w.apply_i64(&rs.rho) == img).unwrap().clone()
            })
            .collect();
        Ok(rs)
    }

    /// Reflection of the scaled vector `x` in the root `a`.
    fn reflect(&self, a: &[i64], x: &[i64]) -> Vec<i64> {
        let c = self.ip_scaled(x, a) * rat_int(2) / self.ip_scaled(a, a);
        let c = c.to_integer().to_i64().expect("integral reflection coefficient");
        combine(x, a, -c)
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `d = |Phi^+| - r`, the degree of the box spline and of the volume function.
    pub fn d(&self) -> usize {
        self.num_positive_roots() - self.rank
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.weyl[self.longest]
    }

    pub fn simple_reflections(&self) -> &[WeylElement] {
        &self.simple_reflections
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.kind, RootType::A | RootType::D)
    }

    // ----- inner products -------------------------------------------------

    /// Inner product of two scaled integer vectors, in actual units.
    pub fn ip_scaled(&self, x: &[i64], y: &[i64]) -> Rational {
        let s: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        rat(s, self.den * self.den) * &self.ip_scale
    }

    pub fn ip(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        x.dot(y) * &self.ip_scale
    }

    pub fn ip_f64(&self, x: &[f64], y: &[f64]) -> f64 {
        lrbox_core::rational::to_f64(&self.ip_scale) * x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
    }

    // ----- coordinate conversions ----------------------------------------

    /// Actual `e`-coordinates of a scaled vector.
    pub fn unscale(&self, x: &[i64]) -> RationalVector {
        RationalVector::from_scaled(x, self.den)
    }

    /// Scaled integer vector for an actual rational vector, if it lies on the scaled grid.
    pub fn scale(&self, x: &RationalVector) -> Option<Vec<i64>> {
        x.scale(&rat_int(self.den)).to_i64()
    }

    pub fn scaled_to_f64(&self, x: &[i64]) -> Vec<f64> {
        x.iter().map(|&v| v as f64 / self.den as f64).collect()
    }

    /// Simple-root coordinates, `None` unless `x` lies in the root lattice.
    pub fn to_root_coords(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.to_q.apply(x)
    }

    /// Integer numerators `N x` with `root_coords = N x / root_coords_den()`; linear in `x`.
    pub fn root_coords_numer(&self, x: &[i64]) -> Vec<i64> {
        self.to_q.num.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn root_coords_den(&self) -> i64 {
        self.to_q.den
    }

    /// Simple-root coordinates of an arbitrary rational point of the Cartan subalgebra.
    pub fn root_coords_rat(&self, x: &RationalVector) -> RationalVector {
        let scaled: Vec<Rational> = x.coords.iter().map(|v| v * rat_int(self.den)).collect();
        RationalVector::new(self.to_q.apply_rat(&scaled))
    }

    pub fn from_root_coords(&self, c: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.ambient];
        for (ci, a) in c.iter().zip(&self.simple_roots) {
            for (x, y) in v.iter_mut().zip(a) {
                *x += ci * y;
            }
        }
        v
    }

    pub fn from_root_coords_rat(&self, c: &RationalVector) -> RationalVector {
        let mut v = RationalVector::zeros(self.ambient);
        for (ci, a) in c.iter().zip(&self.simple_roots) {
            for (x, &y) in v.coords.iter_mut().zip(a) {
                *x += ci * rat(y, self.den);
            }
        }
        v
    }

    /// Fundamental-weight coordinates, `None` unless `x` is in the weight lattice.
    pub fn to_weight_coords(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.to_p.apply(x)
    }

    pub fn weight_coords_rat(&self, x: &RationalVector) -> RationalVector {
        let scaled: Vec<Rational> = x.coords.iter().map(|v| v * rat_int(self.den)).collect();
        RationalVector::new(self.to_p.apply_rat(&scaled))
    }

    pub fn from_weight_coords(&self, c: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.ambient];
        for (ci, w) in c.iter().zip(&self.fundamental_weights) {
            for (x, y) in v.iter_mut().zip(w) {
                *x += ci * y;
            }
        }
        v
    }

    pub fn from_weight_coords_rat(&self, c: &RationalVector) -> RationalVector {
        let mut v = RationalVector::zeros(self.ambient);
        for (ci, w) in c.iter().zip(&self.fundamental_weights) {
            for (x, &y) in v.coords.iter_mut().zip(w) {
                *x += ci * rat(y, self.den);
            }
        }
        v
    }

    pub fn weight_vector(&self, w: &Weight) -> Vec<i64> {
        self.from_weight_coords(&w.coords)
    }

    /// `lambda + rho` as a scaled vector.
    pub fn shifted(&self, w: &Weight) -> Vec<i64> {
        combine(&self.weight_vector(w), &self.rho, 1)
    }

    pub fn rho_f64(&self) -> Vec<f64> {
        self.scaled_to_f64(&self.rho)
    }

    /// True if `lambda + mu - nu` lies in the root lattice.
    pub fn compatible(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> bool {
        let v = combine(&combine(&self.weight_vector(lambda), &self.weight_vector(mu), 1), &self.weight_vector(nu), -1);
        self.to_root_coords(&v).is_some()
    }

    pub fn in_root_lattice(&self, x: &[i64]) -> bool {
        self.to_root_coords(x).is_some()
    }

    // ----- Weyl group action ----------------------------------------------

    pub fn weyl_orbit(&self, x: &RationalVector) -> Vec<(usize, RationalVector)> {
        self.weyl.iter().enumerate().map(|(i, w)| (i, w.apply(x))).collect()
    }

    /// Pairings `<x, alpha_i^vee>` with the simple coroots for a rational point.
    pub fn simple_coroot_pairings(&self, x: &RationalVector) -> Vec<Rational> {
        self.weight_coords_rat(x).coords
    }

    pub fn is_dominant_rat(&self, x: &RationalVector) -> bool {
        self.simple_coroot_pairings(x).iter().all(|c| !c.is_negative())
    }

    pub fn is_dominant_scaled(&self, x: &[i64]) -> bool {
        self.simple_roots.iter().all(|a| x.iter().zip(a).map(|(p, q)| p * q).sum::<i64>() >= 0)
    }

    pub fn is_regular_scaled(&self, x: &[i64]) -> bool {
        self.positive_roots.iter().all(|a| x.iter().zip(a).map(|(p, q)| p * q).sum::<i64>() != 0)
    }

    /// Returns `(x_+, w, on_wall)` with `w(x) = x_+` dominant.
    pub fn dominant_representative(&self, x: &RationalVector) -> (RationalVector, WeylElement, bool) {
        let mut cur = x.clone();
        let mut w = WeylElement::identity(self.ambient);
        loop {
            let pairings = self.simple_coroot_pairings(&cur);
            match pairings.iter().position(|c| c.is_negative()) {
                Some(i) => {
                    let s = &self.simple_reflections[i];
                    cur = s.apply(&cur);
                    w = s.compose(&w);
                }
                None => {
                    let on_wall = pairings.iter().any(Zero::is_zero);
                    return (cur, w, on_wall);
                }
            }
        }
    }

    /// Fast dominant representative of a scaled integer vector.
    ///
    /// Returns `(x_+, eps)` where `eps` is the sign of a Weyl element carrying
    /// `x` to `x_+`, or 0 if `x` lies on a wall.
    pub fn dominant_scaled(&self, x: &[i64]) -> (Vec<i64>, i8) {
        let n = x.len();
        let mut idx: Vec<usize> = (0..n).collect();
        match self.kind {
            RootType::A => {
                idx.sort_by(|&i, &j| x[j].cmp(&x[i]).then(i.cmp(&j)));
                let out: Vec<i64> = idx.iter().map(|&i| x[i]).collect();
                let regular = out.windows(2).all(|p| p[0] != p[1]);
                let eps = if regular { crate::weyl::perm_parity(&idx) } else { 0 };
                (out, eps)
            }
            RootType::B | RootType::C | RootType::D => {
                let negs = x.iter().filter(|&&v| v < 0).count();
                idx.sort_by(|&i, &j| x[j].abs().cmp(&x[i].abs()).then(i.cmp(&j)));
                let mut out: Vec<i64> = idx.iter().map(|&i| x[i].abs()).collect();
                let distinct = out.windows(2).all(|p| p[0] != p[1]);
                let parity = crate::weyl::perm_parity(&idx);
                if self.kind == RootType::D {
                    let has_zero = out[n - 1] == 0;
                    if negs % 2 == 1 && !has_zero {
                        out[n - 1] = -out[n - 1];
                    }
                    let eps = if distinct { parity } else { 0 };
                    (out, eps)
                } else {
                    let regular = distinct && out[n - 1] != 0;
                    let flip = if negs % 2 == 0 { 1 } else { -1 };
                    (out, if regular { parity * flip } else { 0 })
                }
            }
        }
    }

    /// Dominant root-lattice points `kappa` in the closed (or open) hull of `W rho`.
    pub fn dominant_root_points_in_rho_hull(&self, interior: bool) -> Vec<Vec<i64>> {
        let rho_q = self.root_coords_rat(&self.unscale(&self.rho));
        let bounds: Vec<i64> = rho_q.iter().map(|c| c.floor().to_integer().to_i64().unwrap()).collect();
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        loop {
            let v = self.from_root_coords(&cur);
            if self.is_dominant_scaled(&v) {
                let ok = cur.iter().zip(rho_q.iter()).all(|(&c, r)| {
                    let gap = r - rat_int(c);
                    if interior {
                        gap.is_positive()
                    } else {
                        !gap.is_negative()
                    }
                });
                if ok {
                    out.push(v);
                }
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    return out;
                }
                cur[i] += 1;
                if cur[i] <= bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}
