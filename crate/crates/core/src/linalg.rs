//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| crate::rat_int(x)).collect()).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d = &*d - &(&f * s);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

pub fn det(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &piv;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    d
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in piv.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            v
        })
        .collect()
}

/// Outcome of solving a possibly non-square linear system.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent but with free variables; the particular solution sets them to zero.
    Underdetermined { particular: Vec<Rational>, rank: usize },
    Inconsistent,
}

pub fn solve(a: &Matrix, b: &[Rational]) -> Solution {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&cols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &p) in piv.iter().enumerate() {
        x[p] = aug[i][cols].clone();
    }
    if piv.len() == cols {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined { particular: x, rank: piv.len() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    #[test]
    fn det_and_inverse() {
        let m = from_i64(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(det(&m), rat_int(3));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0][0], rat(2, 3));
        assert_eq!(inv[0][1], rat(1, 3));
        assert_eq!(mat_mul(&m, &inv), from_i64(&[vec![1, 0], vec![0, 1]]));
        assert!(inverse(&from_i64(&[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn nullspace_and_rank() {
        let m = from_i64(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn solve_cases() {
        let a = from_i64(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(solve(&a, &[rat_int(1), rat_int(2), rat_int(3)]), Solution::Unique(vec![rat_int(1), rat_int(2)]));
        assert_eq!(solve(&a, &[rat_int(1), rat_int(2), rat_int(4)]), Solution::Inconsistent);
        let u = from_i64(&[vec![1, 1]]);
        assert!(matches!(solve(&u, &[rat_int(1)]), Solution::Underdetermined { rank: 1, .. }));
    }
}
