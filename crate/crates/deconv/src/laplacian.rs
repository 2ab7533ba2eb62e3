//! The box spline Laplacian `D = sum_tau b(tau) nabla_tau Delta_tau`.

use std::collections::BTreeMap;
use std::sync::Arc;

use lrbox_core::{rat, rat_int, MultivariatePolynomial, Rational};
use lrbox_rootsys::{RootSystem, Weight};
use lrbox_volumefn::VolumeContext;
use num_traits::Zero;

use crate::error::DeconvError;

/// A finite-difference operator as a map from scaled shift to coefficient:
/// `(S f)(xi) = sum_s S(s) f(xi + s)`.
pub type Stencil = BTreeMap<Vec<i64>, Rational>;

#[derive(Clone, Debug)]
pub struct LaplacianOperator {
    pub rs: Arc<RootSystem>,
    /// `(tau, b(tau))` with `tau` scaled, over the nonzero lattice values of `b`.
    pub terms: Vec<(Vec<i64>, Rational)>,
}

fn add_to(s: &mut Stencil, at: Vec<i64>, c: Rational) {
    let e = s.entry(at.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        s.remove(&at);
    }
}

impl LaplacianOperator {
    pub fn from_context(ctx: &VolumeContext) -> Self {
        LaplacianOperator { rs: ctx.rs.clone(), terms: ctx.support.iter().cloned().collect() }
    }

    /// `sum_i c_i nabla_{tau_i} Delta_{tau_i}`, written in the same even form as `D`.
    pub fn from_second_differences(rs: Arc<RootSystem>, diffs: &[(Vec<i64>, Rational)]) -> Self {
        let mut acc: Stencil = BTreeMap::new();
        for (tau, c) in diffs {
            let half = c * rat(1, 2);
            let neg: Vec<i64> = tau.iter().map(|x| -x).collect();
            add_to(&mut acc, tau.clone(), half.clone());
            add_to(&mut acc, neg, half);
        }
        LaplacianOperator { rs, terms: acc.into_iter().collect() }
    }

    /// `D f(xi) = sum_tau b(tau) (f(xi + tau) - 2 f(xi) + f(xi - tau))`.
    pub fn apply<F: Fn(&[i64]) -> Rational>(&self, f: F, xi: &[i64]) -> Rational {
        let f0 = f(xi);
        let mut total = Rational::zero();
        for (tau, b) in &self.terms {
            if tau.iter().all(|&t| t == 0) {
                continue;
            }
            let plus: Vec<i64> = xi.iter().zip(tau).map(|(a, t)| a + t).collect();
            let minus: Vec<i64> = xi.iter().zip(tau).map(|(a, t)| a - t).collect();
            total += b * (f(&plus) - &f0 * rat_int(2) + f(&minus));
        }
        total
    }

    /// `D` as a stencil.
    pub fn stencil(&self) -> Stencil {
        let mut s = Stencil::new();
        let zero = vec![0i64; self.rs.ambient];
        for (tau, b) in &self.terms {
            if tau.iter().all(|&t| t == 0) {
                continue;
            }
            let neg: Vec<i64> = tau.iter().map(|x| -x).collect();
            add_to(&mut s, tau.clone(), b.clone());
            add_to(&mut s, neg, b.clone());
            add_to(&mut s, zero.clone(), -b * rat_int(2));
        }
        s
    }

    /// `D p` for a polynomial `p` in simple-root coordinates.
    pub fn apply_polynomial(&self, p: &MultivariatePolynomial) -> MultivariatePolynomial {
        let mut out = MultivariatePolynomial::zero(p.nvars());
        for (tau, b) in &self.terms {
            if tau.iter().all(|&t| t == 0) {
                continue;
            }
            let q = self.rs.to_root_coords(tau).expect("root lattice point");
            let plus: Vec<Rational> = q.iter().map(|&c| rat_int(c)).collect();
            let minus: Vec<Rational> = q.iter().map(|&c| rat_int(-c)).collect();
            let second = p.translate(&plus).add(&p.translate(&minus)).sub(&p.scale(&rat_int(2)));
            out = out.add(&second.scale(b));
        }
        out
    }
}

/// `D f(xi)`.
pub fn laplacian_apply<F: Fn(&[i64]) -> Rational>(op: &LaplacianOperator, f: F, xi: &[i64]) -> Rational {
    op.apply(f, xi)
}

/// `((1 + D/2) f(xi), sum_tau b(tau) f(xi - tau))`.
pub fn convolution_sides<F: Fn(&[i64]) -> Rational>(op: &LaplacianOperator, f: F, xi: &[i64]) -> (Rational, Rational) {
    let lhs = f(xi) + op.apply(&f, xi) * rat(1, 2);
    let mut rhs = Rational::zero();
    for (tau, b) in &op.terms {
        let at: Vec<i64> = xi.iter().zip(tau).map(|(a, t)| a - t).collect();
        rhs += b * f(&at);
    }
    (lhs, rhs)
}

/// `(J(lambda', mu'; nu'), (1 + D/2) m(nu'))` with `m` the signed skew multiplicity.
pub fn jlr_laplacian_sides(
    ctx: &VolumeContext,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<(Rational, Rational), DeconvError> {
    let rs = &ctx.rs;
    if !rs.compatible(lambda, mu, nu) {
        return Err(lrbox_volumefn::VolumeError::Incompatible {
            lambda: lambda.coords.clone(),
            mu: mu.coords.clone(),
            nu: nu.coords.clone(),
        }
        .into());
    }
    let nup = rs.shifted(nu);
    let j = ctx.evaluator(lambda, mu)?.volume_j_scaled(&nup);
    let op = LaplacianOperator::from_context(ctx);
    let mut skew: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    let mut points = vec![nup.clone()];
    for (tau, _) in &op.terms {
        points.push(nup.iter().zip(tau).map(|(a, t)| a + t).collect());
        points.push(nup.iter().zip(tau).map(|(a, t)| a - t).collect());
    }
    for p in points {
        if !skew.contains_key(&p) {
            let m = ctx.oracle.skew_multiplicity(lambda, mu, &p)?;
            skew.insert(p, rat_int(m));
        }
    }
    let m = |x: &[i64]| skew.get(x).cloned().expect("stencil point evaluated");
    let rhs = m(&nup) + op.apply(m, &nup) * rat(1, 2);
    Ok((j, rhs))
}

pub fn jlr_laplacian_verify(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<bool, DeconvError> {
    let (a, b) = jlr_laplacian_sides(ctx, lambda, mu, nu)?;
    Ok(a == b)
}

/// Composition of stencils.
pub fn compose(a: &Stencil, b: &Stencil) -> Stencil {
    let mut out = Stencil::new();
    for (sa, ca) in a {
        for (sb, cb) in b {
            add_to(&mut out, sa.iter().zip(sb).map(|(x, y)| x + y).collect(), ca * cb);
        }
    }
    out
}

/// `sum_{k=0}^{order} (-D/2)^k` as a stencil.
pub fn neumann_stencil(op: &LaplacianOperator, order: usize) -> Stencil {
    let zero = vec![0i64; op.rs.ambient];
    let step: Stencil = op.stencil().into_iter().map(|(s, c)| (s, c * rat(-1, 2))).collect();
    let mut term: Stencil = [(zero.clone(), rat_int(1))].into_iter().collect();
    let mut total = term.clone();
    for _ in 0..order {
        term = compose(&term, &step);
        for (s, c) in &term {
            add_to(&mut total, s.clone(), c.clone());
        }
    }
    total
}

/// Applies a stencil to `f` at `xi`.
pub fn apply_stencil<F: Fn(&[i64]) -> Rational>(s: &Stencil, f: F, xi: &[i64]) -> Rational {
    s.iter().fold(Rational::zero(), |acc, (shift, c)| {
        let at: Vec<i64> = xi.iter().zip(shift).map(|(a, b)| a + b).collect();
        acc + c * f(&at)
    })
}
