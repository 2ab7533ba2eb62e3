//! Exact deconvolution of finitely supported lattice measures.

use std::collections::BTreeMap;

use lrbox_core::{CoreError, LatticeMeasure, Rational};
use num_traits::Zero;

use crate::error::DeconvError;

/// Solves `h = f * g` for `g` by peeling vertices of the support of `h`.
///
/// The vertex is the lexicographic maximum, which is the maximizer of the
/// functional `sum_i eps^i x_i` for small `eps`; its unique split is
/// `tau = tau_1 + tau_2` with `tau_1` the lexicographic maximum of `supp f`.
/// Every coordinate extent of `supp g` is fixed by those of `f` and `h`, so a
/// peeled point leaving that box proves `h` is not in the image.
pub fn lattice_deconvolve(f: &LatticeMeasure, h: &LatticeMeasure) -> Result<LatticeMeasure, DeconvError> {
    if f.kind != h.kind {
        return Err(CoreError::LatticeMismatch(format!("{:?} vs {:?}", f.kind, h.kind)).into());
    }
    if f.dim() != h.dim() {
        return Err(CoreError::Dimension { expected: f.dim(), got: h.dim() }.into());
    }
    let (top, top_value) = f.lex_max().ok_or(DeconvError::ZeroDivisor)?;
    let top = top.clone();
    let base = h.base.iter().zip(&f.base).map(|(a, b)| a - b).collect();
    let mut g = LatticeMeasure::new(h.kind, base);
    if h.is_empty() {
        return Ok(g);
    }

    let dim = f.dim();
    let extent = |m: &LatticeMeasure, i: usize| {
        let lo = m.iter().map(|(k, _)| k[i]).min().unwrap();
        (lo, m.iter().map(|(k, _)| k[i]).max().unwrap())
    };
    let mut lo = vec![0i64; dim];
    let mut hi = vec![0i64; dim];
    let mut cells: u128 = 1;
    for i in 0..dim {
        let (fl, fh) = extent(f, i);
        let (hl, hh) = extent(h, i);
        lo[i] = hl - fl;
        hi[i] = hh - fh;
        if lo[i] > hi[i] {
            return Err(DeconvError::NotInImage(format!("coordinate {i} extent of h is narrower than that of f")));
        }
        cells = cells.saturating_mul((hi[i] - lo[i] + 1) as u128);
    }

    let mut residual: BTreeMap<Vec<i64>, Rational> = h.entries().clone();
    let mut steps: u128 = 0;
    while let Some((tau, value)) = residual.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let t2: Vec<i64> = tau.iter().zip(&top).map(|(a, b)| a - b).collect();
        if t2.iter().enumerate().any(|(i, &c)| c < lo[i] || c > hi[i]) || steps >= cells {
            return Err(DeconvError::NotInImage(format!("residual vertex {tau:?} has no preimage")));
        }
        steps += 1;
        let coeff = value / top_value;
        for (p, v) in f.iter() {
            let at: Vec<i64> = p.iter().zip(&t2).map(|(a, b)| a + b).collect();
            let e = residual.entry(at).or_insert_with(Rational::zero);
            *e -= v * &coeff;
            if e.is_zero() {
                let key: Vec<i64> = p.iter().zip(&t2).map(|(a, b)| a + b).collect();
                residual.remove(&key);
            }
        }
        g.add_at(t2, coeff);
    }
    Ok(g)
}
