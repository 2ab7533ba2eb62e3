//! Multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// All exponent vectors in `nvars` variables of total degree at most `degree`, graded then lexicographic.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=degree {
        let mut cur = vec![0u32; nvars];
        fill(&mut out, &mut cur, 0, d);
    }
    out
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    r
}

impl MultivariatePolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut s = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            s += t;
        }
        s
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| crate::rational::to_f64(c) * e.iter().zip(x).map(|(&k, xi)| xi.powi(k as i32)).product::<f64>())
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                p.add_term(ea.iter().zip(eb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        p
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c * Rational::from_integer(e[i].into()));
            }
        }
        p
    }

    /// Directional derivative along `v`.
    pub fn directional(&self, v: &[Rational]) -> Self {
        let mut p = Self::zero(self.nvars);
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                p = p.add(&self.partial(i).scale(vi));
            }
        }
        p
    }

    /// The polynomial `x -> p(x + v)`.
    pub fn translate(&self, v: &[Rational]) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            // Expand prod_i (x_i + v_i)^{e_i} by the binomial theorem.
            let mut partial = vec![(vec![0u32; self.nvars], c.clone())];
            for i in 0..self.nvars {
                let mut next = Vec::new();
                for (exp, coef) in &partial {
                    for k in 0..=e[i] {
                        let mut ne = exp.clone();
                        ne[i] = k;
                        let vpow = num_traits::pow(v[i].clone(), (e[i] - k) as usize);
                        let nc = coef * binomial(e[i], k) * vpow;
                        if !nc.is_zero() {
                            next.push((ne, nc));
                        }
                    }
                }
                partial = next;
            }
            for (exp, coef) in partial {
                p.add_term(exp, coef);
            }
        }
        p
    }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(2, 2).len(), 6);
        assert_eq!(monomials(3, 3).len(), 20);
        assert_eq!(monomials(0, 4), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn translate_matches_eval() {
        let x = MultivariatePolynomial::var(2, 0);
        let y = MultivariatePolynomial::var(2, 1);
        let p = x.mul(&x).mul(&y).add(&y.scale(&rat(-3, 2))).add(&MultivariatePolynomial::constant(2, rat_int(5)));
        let v = vec![rat(1, 3), rat_int(-2)];
        let q = p.translate(&v);
        let pt = vec![rat(7, 5), rat(-1, 4)];
        let shifted: Vec<Rational> = pt.iter().zip(&v).map(|(a, b)| a + b).collect();
        assert_eq!(q.eval(&pt), p.eval(&shifted));
    }

    #[test]
    fn derivatives() {
        let x = MultivariatePolynomial::var(2, 0);
        let y = MultivariatePolynomial::var(2, 1);
        let p = x.mul(&x).mul(&y);
        assert_eq!(p.partial(0), x.mul(&y).scale(&rat_int(2)));
        let d = p.directional(&[rat_int(1), rat_int(1)]);
        assert_eq!(d, x.mul(&y).scale(&rat_int(2)).add(&x.mul(&x)));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(MultivariatePolynomial::zero(2).degree(), None);
    }
}
