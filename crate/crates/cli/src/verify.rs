//! The `verify` identity suite.

use lrbox_boxspline::{r_polynomial, verify_identities};
use lrbox_deconv::{
    finite_difference_inversion, jlr_laplacian_verify, multiplicities_from_j_algorithmic, multiplicities_from_j_fourier, MAX_FOURIER_RANK,
};
use lrbox_rootsys::{RootType, Weight};
use lrbox_volumefn::{conjugation_sums, jlr_verify, sample_shielded_triples, VolumeContext};
use lrbox_weightmult::{i_lattice_and_deconv_roundtrip, i_total_mass, kostka_fd_inversion, kostka_from_i_fourier, sample_shielded_pairs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{CliError, Suite};

const SEED: u64 = 20;

#[derive(Clone, Debug)]
pub struct SuiteCheck {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteCheck {
    fn new(name: &str) -> Self {
        SuiteCheck { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.cases > 0 && self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub algebra: String,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(SuiteCheck::passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "cases": c.cases, "passed": c.passed(), "failures": c.failures }))
            .collect();
        json!({ "algebra": self.algebra, "checks": checks, "passed": self.passed() })
    }
}

/// Small dominant weights: coordinates up to 2 in rank at most 2, else up to 1.
fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> Weight {
    let max = if rank <= 2 { 2 } else { 1 };
    Weight::new((0..rank).map(|_| rng.gen_range(0..=max)).collect())
}

fn random_pairs(ctx: &VolumeContext, n: usize, rng: &mut ChaCha8Rng) -> Vec<(Weight, Weight)> {
    (0..n).map(|_| (random_weight(rng, ctx.rs.rank), random_weight(rng, ctx.rs.rank))).collect()
}

fn boxspline_checks(ctx: &VolumeContext, out: &mut Vec<SuiteCheck>) -> Result<(), CliError> {
    let report = verify_identities(&ctx.table, &ctx.oracle, 20, SEED)?;
    for c in report.checks {
        out.push(SuiteCheck { name: c.name.to_string(), cases: c.cases, failures: c.failures });
    }
    let mut r0 = SuiteCheck::new("R(0) = 1");
    let r = r_polynomial(&ctx.table, &vec![0.0; ctx.rs.ambient]);
    r0.record((r - 1.0).abs() < 1e-12, || format!("R(0) = {r}"));
    out.push(r0);
    Ok(())
}

fn volume_checks(ctx: &VolumeContext, out: &mut Vec<SuiteCheck>) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut jlr = SuiteCheck::new("J-LR relation");
    let mut conj = SuiteCheck::new("conjugation sums");
    for (lambda, mu) in random_pairs(ctx, 3, &mut rng) {
        for nu in ctx.oracle.tensor_decomposition(&lambda, &mu)?.keys() {
            jlr.record(jlr_verify(ctx, &lambda, &mu, nu)?, || format!("{lambda:?} {mu:?} {nu:?}"));
        }
        conj.record(conjugation_sums(ctx, &lambda, &mu)?.passed(), || format!("{lambda:?} {mu:?}"));
    }
    out.push(jlr);
    out.push(conj);
    Ok(())
}

fn deconv_checks(ctx: &VolumeContext, out: &mut Vec<SuiteCheck>) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut algo = SuiteCheck::new("algorithmic deconvolution");
    let mut lap = SuiteCheck::new("J-LR Laplacian");
    let mut fourier = SuiteCheck::new("Fourier inversion");
    for (lambda, mu) in random_pairs(ctx, 3, &mut rng) {
        let expected = ctx.oracle.tensor_decomposition(&lambda, &mu)?;
        let got = multiplicities_from_j_algorithmic(ctx, &lambda, &mu)?;
        algo.record(got == expected, || format!("{lambda:?} {mu:?}"));
        for (nu, &c) in &expected {
            lap.record(jlr_laplacian_verify(ctx, &lambda, &mu, nu)?, || format!("{lambda:?} {mu:?} {nu:?}"));
            if ctx.rs.rank <= MAX_FOURIER_RANK {
                let f = multiplicities_from_j_fourier(ctx, &lambda, &mu, nu)?;
                fourier.record(f == c, || format!("{lambda:?} {mu:?} {nu:?}: {f} != {c}"));
            }
        }
    }
    out.push(algo);
    out.push(lap);
    if fourier.cases > 0 {
        out.push(fourier);
    }
    if ctx.rs.kind == RootType::A && ctx.rs.rank <= 3 {
        let mut fd = SuiteCheck::new("finite-difference inversion");
        for (lambda, mu, nu, c) in sample_shielded_triples(&ctx.oracle, 3, 60, 3, 400, SEED)? {
            let got = finite_difference_inversion(ctx, &lambda, &mu, &nu)?;
            fd.record(got == c, || format!("{lambda:?} {mu:?} {nu:?}: {got} != {c}"));
        }
        out.push(fd);
    }
    Ok(())
}

fn kostka_checks(ctx: &VolumeContext, out: &mut Vec<SuiteCheck>) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut round = SuiteCheck::new("weight multiplicity round trip");
    let mut mass = SuiteCheck::new("total mass of I");
    let mut fourier = SuiteCheck::new("Kostka numbers by Fourier inversion");
    for _ in 0..3 {
        let lambda = random_weight(&mut rng, ctx.rs.rank);
        round.record(i_lattice_and_deconv_roundtrip(ctx, &lambda)?, || format!("{lambda:?}"));
        let dim = ctx.oracle.weyl_dimension(&lambda);
        let m = i_total_mass(ctx, &lambda)?;
        mass.record(m == lrbox_core::rat_int(dim as i64), || format!("{lambda:?}: {m} != {dim}"));
        if ctx.rs.rank <= MAX_FOURIER_RANK {
            for x in ctx.oracle.character(&lambda)?.dominant.keys() {
                let mu = Weight::new(ctx.rs.to_weight_coords(x).expect("weight"));
                let expected = ctx.oracle.weight_multiplicity(&lambda, &mu)?;
                let got = kostka_from_i_fourier(ctx, &lambda, &mu)?;
                fourier.record(got == expected, || format!("{lambda:?} {mu:?}: {got} != {expected}"));
            }
        }
    }
    out.push(round);
    out.push(mass);
    if fourier.cases > 0 {
        out.push(fourier);
    }
    if ctx.rs.kind == RootType::A && ctx.rs.rank <= 3 {
        let mut fd = SuiteCheck::new("Kostka numbers by finite differences");
        for (lambda, mu, k) in sample_shielded_pairs(ctx, 3, 30, 2000, SEED)? {
            let got = kostka_fd_inversion(ctx, &lambda, &mu)?;
            fd.record(got == k, || format!("{lambda:?} {mu:?}: {got} != {k}"));
        }
        out.push(fd);
    }
    Ok(())
}

/// Runs the selected identity checks for one root system.
pub fn run_suite(ctx: &VolumeContext, suite: Suite) -> Result<SuiteReport, CliError> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::Boxspline) {
        boxspline_checks(ctx, &mut checks)?;
    }
    if matches!(suite, Suite::All | Suite::Volume) {
        volume_checks(ctx, &mut checks)?;
    }
    if matches!(suite, Suite::All | Suite::Deconv) {
        deconv_checks(ctx, &mut checks)?;
    }
    if matches!(suite, Suite::All | Suite::Kostka) {
        kostka_checks(ctx, &mut checks)?;
    }
    Ok(SuiteReport { algebra: ctx.rs.label(), checks })
}
