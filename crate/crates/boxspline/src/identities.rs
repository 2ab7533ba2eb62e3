//! Exact identities relating `b` on the root lattice, `r_kappa` and multiplicities.

use std::collections::BTreeSet;
use std::fmt;

use lrbox_core::{rat_int, Rational};
use lrbox_multoracle::Oracle;
use lrbox_rootsys::{RootType, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BoxSplineError;
use crate::rpoly::r_polynomial;
use crate::table::BoxSplineTable;

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Largest deviation for floating-point checks.
    pub max_error: Option<f64>,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        IdentityCheck { name, cases: 0, failures: Vec::new(), max_error: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub system: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAILED" };
            write!(f, "{} {}: {} cases {}", self.system, c.name, c.cases, status)?;
            if let Some(e) = c.max_error {
                write!(f, " (max error {e:.3e})")?;
            }
            writeln!(f)?;
            for w in c.failures.iter().take(5) {
                writeln!(f, "  witness: {w}")?;
            }
        }
        Ok(())
    }
}

fn add(a: &[i64], b: &[i64], s: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// Checks every identity of the table against the multiplicity oracle.
///
/// `samples` controls the number of `(tau, nu)` pairs for the convolution
/// identity and of random points for the character expansion of `R`.
pub fn verify_identities(table: &BoxSplineTable, oracle: &Oracle, samples: usize, seed: u64) -> Result<IdentityReport, BoxSplineError> {
    let rs = table.root_system.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kappas = table.k_weights();
    let chars = kappas.iter().map(|k| oracle.character(k)).collect::<Result<Vec<_>, _>>()?;

    let mut closed: BTreeSet<Vec<i64>> = BTreeSet::new();
    for p in rs.dominant_root_points_in_rho_hull(false) {
        for w in rs.weyl() {
            closed.insert(w.apply_i64(&p));
        }
    }

    let mut sum = IdentityCheck::new("partition of unity");
    let total = table.total();
    sum.record(total == rat_int(1), || format!("sum b = {total}"));

    let mut sym = IdentityCheck::new("b symmetry");
    for (tau, b) in table.support_scaled() {
        let neg: Vec<i64> = tau.iter().map(|v| -v).collect();
        sym.record(table.b_scaled(&neg) == b, || format!("b(-tau) != b(tau) at {tau:?}"));
        for w in rs.weyl() {
            let wt = w.apply_i64(&tau);
            sym.record(table.b_scaled(&wt) == b, || format!("b(w tau) != b(tau) at {tau:?}"));
        }
    }

    let mut on_q = IdentityCheck::new("b from r and multiplicities");
    let mut rels_b = IdentityCheck::new("b from b and multiplicities");
    let b_at_shift: Vec<Rational> = table
        .k_points
        .iter()
        .map(|kappa| {
            let shifted = add(kappa, &rs.rho, 1);
            rs.weyl().iter().fold(rat_int(0), |acc, w| {
                let b = table.b_scaled(&add(&shifted, &w.apply_i64(&rs.rho), -1));
                if w.sign > 0 {
                    acc + b
                } else {
                    acc - b
                }
            })
        })
        .collect();
    for tau in &closed {
        let b = table.b_scaled(tau);
        let mut via_r = rat_int(0);
        let mut via_b = rat_int(0);
        for ((k, ch), bk) in kappas.iter().zip(&chars).zip(&b_at_shift) {
            let m = rat_int(ch.mult(tau) as i64);
            via_r += &table.r_coeffs[k] * &m;
            via_b += bk * &m;
        }
        on_q.record(via_r == b, || format!("tau {tau:?}: b = {b}, sum r mult = {via_r}"));
        rels_b.record(via_b == b, || format!("tau {tau:?}: b = {b}, alternating sum = {via_b}"));
    }

    let mut rels_r = IdentityCheck::new("r from r and multiplicities");
    for (kappa, kw) in table.k_points.iter().zip(&kappas) {
        let shifted = add(kappa, &rs.rho, 1);
        let mut acc = rat_int(0);
        for w in rs.weyl() {
            let pt = add(&shifted, &w.apply_i64(&rs.rho), -1);
            let inner = kappas
                .iter()
                .zip(&chars)
                .fold(rat_int(0), |a, (xi, ch)| a + &table.r_coeffs[xi] * rat_int(ch.mult(&pt) as i64));
            if w.sign > 0 {
                acc += inner;
            } else {
                acc -= inner;
            }
        }
        let r = &table.r_coeffs[kw];
        rels_r.record(&acc == r, || format!("kappa {kw:?}: r = {r}, alternating sum = {acc}"));
    }

    let mut bks = IdentityCheck::new("alternating b against r and LR");
    let bound = if rs.rank <= 2 { 3 } else { 1 };
    for _ in 0..samples {
        let tau = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=bound)).collect());
        let mut nus: BTreeSet<Weight> = BTreeSet::new();
        nus.insert(tau.clone());
        for k in &kappas {
            nus.extend(oracle.tensor_decomposition(&tau, k)?.into_keys());
        }
        let taup = rs.shifted(&tau);
        for nu in nus {
            let nup = rs.shifted(&nu);
            let lhs = rs.weyl().iter().fold(rat_int(0), |acc, w| {
                let b = table.b_scaled(&add(&w.apply_i64(&taup), &nup, -1));
                if w.sign > 0 {
                    acc + b
                } else {
                    acc - b
                }
            });
            let mut rhs = rat_int(0);
            for k in &kappas {
                let c = oracle.lr_coefficient(&tau, k, &nu)?;
                rhs += &table.r_coeffs[k] * rat_int(c as i64);
            }
            bks.record(lhs == rhs, || format!("tau {:?} nu {:?}: {lhs} vs {rhs}", tau.coords, nu.coords));
        }
    }

    let mut er = IdentityCheck::new("R as a character sum");
    let mut max_err: f64 = 0.0;
    for _ in 0..samples.max(1) {
        let mut x: Vec<f64> = (0..rs.ambient).map(|_| rng.gen_range(-4.0..4.0)).collect();
        if rs.kind == RootType::A {
            let mean = x.iter().sum::<f64>() / x.len() as f64;
            x.iter_mut().for_each(|v| *v -= mean);
        }
        let direct = r_polynomial(table, &x);
        let (mut re, mut im) = (0.0, 0.0);
        for k in &kappas {
            let chi = oracle.character_value(k, &x)?;
            let r = lrbox_core::rational::to_f64(&table.r_coeffs[k]);
            re += r * chi.re;
            im += r * chi.im;
        }
        let err = (direct - re).abs().max(im.abs());
        max_err = max_err.max(err);
        er.record(err < 1e-9, || format!("x {x:?}: R = {direct}, character sum = {re} + {im}i"));
    }
    er.max_error = Some(max_err);

    Ok(IdentityReport { system: rs.label(), checks: vec![sum, sym, on_q, rels_b, rels_r, bks, er] })
}
