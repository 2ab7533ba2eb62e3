//! Recovering LR coefficients from a local polynomial fit of `J` and the
//! operator `A-hat(Phi+)`.

use lrbox_core::{bernoulli, interpolate, rat, rat_int, MultivariatePolynomial, Rational, RationalVector};
use lrbox_rootsys::{RootSystem, RootType, Weight};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::VolumeError;
use crate::evaluator::{VolumeContext, VolumeEvaluator};
use crate::shielded::shielded_test;

/// Coefficient of `d^{2n}` in `(d/2) / sinh(d/2)`: `(2^{1-2n} - 1) B_{2n} / (2n)!`.
pub fn ahat_coefficient(n: u32) -> Rational {
    let b = bernoulli(2 * n).expect("even index");
    let fact: Rational = (1..=2 * n as i64).map(rat_int).product();
    (rat(2, 1 << (2 * n)) - Rational::one()) * b / fact
}

fn truncate(p: &MultivariatePolynomial, order: u32) -> MultivariatePolynomial {
    MultivariatePolynomial::from_terms(
        p.nvars(),
        p.terms().iter().filter(|(e, _)| e.iter().sum::<u32>() <= order).map(|(e, c)| (e.clone(), c.clone())),
    )
}

/// Symbol of `A-hat(Phi+)` truncated to total order `order`, in the variables
/// `xi_i` dual to simple-root coordinates, so that `d_alpha = sum_i c_i(alpha) xi_i`.
pub fn ahat_symbol(rs: &RootSystem, order: u32) -> MultivariatePolynomial {
    let r = rs.rank;
    let mut out = MultivariatePolynomial::constant(r, Rational::one());
    for alpha in &rs.positive_roots_q {
        let linear = MultivariatePolynomial::from_terms(
            r,
            (0..r).filter(|&i| alpha[i] != 0).map(|i| {
                let mut e = vec![0u32; r];
                e[i] = 1;
                (e, rat_int(alpha[i]))
            }),
        );
        let square = linear.mul(&linear);
        let mut series = MultivariatePolynomial::constant(r, Rational::one());
        let mut power = MultivariatePolynomial::constant(r, Rational::one());
        for n in 1..=order / 2 {
            power = truncate(&power.mul(&square), order);
            series = series.add(&power.scale(&ahat_coefficient(n)));
        }
        out = truncate(&out.mul(&series), order);
    }
    out
}

/// Applies a constant-coefficient operator given by its symbol and evaluates at 0.
pub fn apply_symbol_at_origin(symbol: &MultivariatePolynomial, f: &MultivariatePolynomial) -> Rational {
    symbol.terms().iter().fold(Rational::zero(), |acc, (e, c)| {
        let fact: Rational = e.iter().flat_map(|&k| 1..=k as i64).map(rat_int).product();
        acc + c * fact * f.coefficient(e)
    })
}

/// Result of a local fit.
#[derive(Clone, Debug)]
pub struct LocalFit {
    /// `f(center + sum_i u_i alpha_i)` as a polynomial in `u`.
    pub polynomial: MultivariatePolynomial,
    pub step: Rational,
    pub points: usize,
    pub value: u64,
}

/// `C_{lambda mu}^nu` as `A-hat(Phi+) J(lambda', mu'; .)` evaluated at `nu'`.
pub fn ahat_via_local_fit(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64, VolumeError> {
    Ok(ahat_local_fit(ctx, lambda, mu, nu)?.value)
}

pub fn ahat_local_fit(ctx: &VolumeContext, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<LocalFit, VolumeError> {
    let rs = &ctx.rs;
    if rs.kind != RootType::A {
        return Err(VolumeError::NotTypeA(rs.label()));
    }
    if !shielded_test(rs, lambda, mu, nu)? {
        return Err(VolumeError::NotShielded);
    }
    let nup = rs.shifted(nu);
    let ev = VolumeEvaluator::local(ctx, lambda, mu, &nup, (rs.d() / 2) as i64)?;
    ahat_fit_at(rs, &nup, |x, q| ev.volume_j_scaled_frac(x, q))
}

/// Fits the local polynomial of `f` around the scaled point `center` and applies
/// `A-hat(Phi+)` to it at `center`.
///
/// `f(x, q)` evaluates at `x / (rs.den * q)`. The grid stays strictly inside
/// `center + floor(d/2) hull(W rho)`, where `f` must be polynomial.
pub fn ahat_fit_at<F>(rs: &RootSystem, center: &[i64], f: F) -> Result<LocalFit, VolumeError>
where
    F: Fn(&[i64], i64) -> Rational + Sync,
{
    let d = rs.d() as u32;
    let r = rs.rank;
    if d < 2 {
        let j = f(center, 1);
        let poly = MultivariatePolynomial::constant(r, j.clone());
        return Ok(LocalFit { polynomial: poly, step: Rational::zero(), points: 1, value: to_count(&j)? });
    }
    let q = 2 * (d as i64 + 2);
    let step = rat(1, q);
    let mut ks: Vec<Vec<i64>> = lrbox_core::poly::monomials(r, d).into_iter().map(|e| e.iter().map(|&x| x as i64).collect()).collect();
    for i in 0..r {
        for k in 1..=2 {
            let mut v = vec![0i64; r];
            v[i] = -k;
            ks.push(v);
        }
    }
    let reach = (d / 2) as i64;
    let offsets: Vec<Vec<i64>> = ks.iter().map(|k| rs.from_root_coords(k)).collect();
    for o in &offsets {
        let (dom, _) = rs.dominant_scaled(o);
        let gap: Vec<i64> = rs.rho.iter().zip(&dom).map(|(p, x)| q * reach * p - x).collect();
        if rs.root_coords_numer(&gap).iter().any(|c| *c <= 0) {
            return Err(VolumeError::FitInconsistent(format!("grid offset {o:?} leaves the shielded hull")));
        }
    }
    let values: Vec<Rational> = offsets
        .par_iter()
        .map(|o| {
            let x: Vec<i64> = center.iter().zip(o).map(|(n, oi)| q * n + oi).collect();
            f(&x, q)
        })
        .collect();
    let points: Vec<RationalVector> = ks.iter().map(|k| RationalVector::new(k.iter().map(|&x| rat(x, q)).collect())).collect();
    let polynomial = interpolate(&points, &values, d).map_err(|e| VolumeError::FitInconsistent(e.to_string()))?;
    let value = apply_symbol_at_origin(&ahat_symbol(rs, d), &polynomial);
    Ok(LocalFit { polynomial, step, points: points.len(), value: to_count(&value)? })
}

fn to_count(v: &Rational) -> Result<u64, VolumeError> {
    if v.is_integer() && !v.is_negative() {
        Ok(v.to_integer().to_u64().expect("fits"))
    } else {
        Err(VolumeError::NonInteger(v.to_string()))
    }
}
