//! Small integer matrix helpers used by the slice geometry.

use lrbox_core::linalg;
use lrbox_core::{rat_int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Determinant by fraction-free elimination, falling back to big integers on overflow.
pub fn det(m: &[Vec<i128>]) -> BigInt {
    det_i128(m).map(BigInt::from).unwrap_or_else(|| det_big(m))
}

fn det_i128(m: &[Vec<i128>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn det_big(m: &[Vec<i128>]) -> BigInt {
    let rows: linalg::Matrix = m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    linalg::det(&rows).to_integer()
}

/// Integer basis of the kernel of `rows` (each of length `cols`), one vector per column of the result.
pub fn kernel_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i128>> {
    if rows.is_empty() {
        return (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect();
    }
    let m: linalg::Matrix = rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect();
    linalg::nullspace(&m, cols).into_iter().map(|v| primitive(&v)).collect()
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive(v: &[Rational]) -> Vec<i128> {
    let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::from(1) } else { g.abs() };
    ints.iter().map(|x| (x / &g).to_i128().expect("kernel entry fits in i128")).collect()
}

pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m: linalg::Matrix = rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    linalg::rank(&m)
}
