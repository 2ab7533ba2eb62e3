//! Weyl group elements as signed permutations of `e`-coordinates.

use lrbox_core::{Rational, RationalVector};

/// `w(x)_i = signs[i] * x[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    /// Determinant of the induced map on the Cartan subalgebra.
    pub sign: i8,
}

pub(crate) fn perm_parity(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut s = 1i8;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        let flips = signs.iter().filter(|&&s| s < 0).count();
        let sign = perm_parity(&perm) * if flips % 2 == 0 { 1 } else { -1 };
        Self { perm, signs, sign }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect(), vec![1; n])
    }

    pub fn apply_i64(&self, x: &[i64]) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s as i64 * x[p]).collect()
    }

    pub fn apply_into(&self, x: &[i64], out: &mut [i64]) {
        for ((o, &p), &s) in out.iter_mut().zip(&self.perm).zip(&self.signs) {
            *o = s as i64 * x[p];
        }
    }

    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s as f64 * x[p]).collect()
    }

    pub fn apply(&self, x: &RationalVector) -> RationalVector {
        RationalVector::new(
            self.perm
                .iter()
                .zip(&self.signs)
                .map(|(&p, &s)| if s < 0 { -x[p].clone() } else { x[p].clone() })
                .collect::<Vec<Rational>>(),
        )
    }

    /// The product `self * other`, acting as `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm: Vec<usize> = self.perm.iter().map(|&i| other.perm[i]).collect();
        let signs: Vec<i8> = self.perm.iter().zip(&self.signs).map(|(&i, &s)| s * other.signs[i]).collect();
        Self { perm, signs, sign: self.sign * other.sign }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
            signs[p] = self.signs[i];
        }
        Self { perm, signs, sign: self.sign }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s > 0)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Enumerates the signed permutations allowed by the sign rule.
pub(crate) fn enumerate(n: usize, signed: bool, even_flips_only: bool) -> Vec<WeylElement> {
    let perms = permutations(n);
    let mut out = Vec::new();
    for p in perms {
        if !signed {
            out.push(WeylElement::new(p, vec![1; n]));
            continue;
        }
        for mask in 0u32..(1 << n) {
            if even_flips_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(WeylElement::new(p.clone(), signs));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = WeylElement::new(vec![1, 2, 0], vec![1, -1, 1]);
        let b = WeylElement::new(vec![2, 0, 1], vec![-1, -1, 1]);
        let x = vec![3, 5, 7];
        assert_eq!(a.compose(&b).apply_i64(&x), a.apply_i64(&b.apply_i64(&x)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&b).sign, a.sign * b.sign);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(4, false, false).len(), 24);
        assert_eq!(enumerate(3, true, false).len(), 48);
        assert_eq!(enumerate(4, true, true).len(), 192);
    }
}
