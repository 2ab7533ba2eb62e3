//! Combinatorial predicates on the set of positive roots.

use lrbox_core::linalg::{self, Matrix};
use lrbox_core::rat_int;
use num_traits::{One, Signed, Zero};

use crate::system::RootSystem;

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if !rec(i + 1, n, k, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(0, n, k, &mut Vec::new(), f);
}

fn matrix_of(rs: &RootSystem, idx: &[usize]) -> Matrix {
    idx.iter().map(|&i| rs.positive_roots_q[i].iter().map(|&v| rat_int(v)).collect()).collect()
}

/// True iff every basis of positive roots has determinant +-1 in the simple-root basis.
pub fn is_unimodular(rs: &RootSystem) -> bool {
    let mut ok = true;
    subsets(rs.num_positive_roots(), rs.rank, &mut |idx| {
        let d = linalg::det(&matrix_of(rs, idx));
        if !d.is_zero() && !d.abs().is_one() {
            ok = false;
        }
        ok
    });
    ok
}

/// Largest `k` such that deleting any `k + 1` positive roots leaves a spanning set.
///
/// Equals `|Phi^+| - h - 2` where `h` is the largest number of positive roots
/// contained in a hyperplane.
pub fn smoothness_degree(rs: &RootSystem) -> i64 {
    let m = rs.num_positive_roots();
    let r = rs.rank;
    if r == 1 {
        return m as i64 - 2;
    }
    let mut best = 0usize;
    subsets(m, r - 1, &mut |idx| {
        let a = matrix_of(rs, idx);
        if linalg::rank(&a) == r - 1 {
            let normal = &linalg::nullspace(&a, r)[0];
            let count = rs
                .positive_roots_q
                .iter()
                .filter(|q| q.iter().zip(normal).map(|(&x, n)| n * rat_int(x)).sum::<lrbox_core::Rational>().is_zero())
                .count();
            best = best.max(count);
        }
        true
    });
    m as i64 - best as i64 - 2
}
