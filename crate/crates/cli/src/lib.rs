//! Command-line front end: argument parsing, dispatch and JSON output.
//!
//! Weights are comma-separated integers in the fundamental-weight basis and
//! rational points comma-separated `p/q` strings. Every command prints one JSON
//! document on stdout; errors go to stderr as `{"error": ...}`.

mod commands;
mod verify;

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use lrbox_core::{parse_rational, Rational};
use lrbox_rootsys::{RootSystem, Weight};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use verify::{run_suite, SuiteCheck, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed arguments or an unsupported request; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation reported an error; exit code 2.
    #[error("{0}")]
    Compute(String),
}

macro_rules! compute_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Compute(e.to_string())
            }
        })*
    };
}

compute_from!(
    lrbox_core::CoreError,
    lrbox_multoracle::OracleError,
    lrbox_boxspline::BoxSplineError,
    lrbox_volumefn::VolumeError,
    lrbox_deconv::DeconvError,
    lrbox_weightmult::WeightError
);

#[derive(Debug, Parser)]
#[command(name = "lrbox", version, about = "Tensor product and weight multiplicities through box splines")]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Pretty-print JSON with this many spaces; 0 or absent prints compactly.
    #[arg(long, global = true)]
    pub json_indent: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KostkaMethod {
    Kostant,
    Fourier,
    Findiff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeconvMethod {
    Algo,
    Fourier,
    Findiff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Boxspline,
    Volume,
    Deconv,
    Kostka,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LR coefficient `C_{lambda mu}^nu`, or the whole decomposition without `--nu`.
    Lr {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Weight multiplicity `mult_lambda(mu)`.
    Kostka {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value = "kostant")]
        method: KostkaMethod,
    },
    /// Kostant partition function at a root-lattice point (simple-root coordinates).
    Partition {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Box spline density at a point (simple-root coordinates), or its table on `Q`.
    Boxspline {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long)]
        table: bool,
        /// Evaluate `R` at this ambient point instead.
        #[arg(long, allow_hyphen_values = true)]
        rpoly: Option<String>,
    },
    /// `J(lambda', mu'; gamma)` with `gamma` in fundamental-weight coordinates.
    Volume {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// Dump the lattice values of `J` instead.
        #[arg(long)]
        lattice: bool,
    },
    /// LR coefficients recovered from `J`.
    Deconv {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value = "algo")]
        method: DeconvMethod,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// `R(x) = sum_tau b(tau) cos <tau, x>` at an ambient point.
    Rpoly {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Runs the identity suite.
    Verify {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

/// Exit code and the text for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_algebra(s: &str) -> Result<Arc<RootSystem>, CliError> {
    s.parse::<RootSystem>().map(Arc::new).map_err(|e| CliError::Usage(format!("algebra {s:?}: {e}")))
}

pub fn parse_ints(s: &str, len: usize, what: &str) -> Result<Vec<i64>, CliError> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("{what}: cannot parse {t:?} as an integer"))))
        .collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(CliError::Usage(format!("{what}: expected {len} coordinates, got {}", v.len())));
    }
    Ok(v)
}

pub fn parse_weight(rs: &RootSystem, s: &str, what: &str, dominant: bool) -> Result<Weight, CliError> {
    let w = Weight::new(parse_ints(s, rs.rank, what)?);
    if dominant && !w.is_dominant() {
        return Err(CliError::Usage(format!("{what}: {:?} is not dominant", w.coords)));
    }
    Ok(w)
}

pub fn parse_rationals(s: &str, len: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    let v: Vec<Rational> = s
        .split(',')
        .map(|t| parse_rational(t.trim()).map_err(|e| CliError::Usage(format!("{what}: {e}"))))
        .collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(CliError::Usage(format!("{what}: expected {len} coordinates, got {}", v.len())));
    }
    Ok(v)
}

pub fn parse_floats(s: &str, len: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("{what}: cannot parse {t:?} as a number"))))
        .collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(CliError::Usage(format!("{what}: expected {len} coordinates, got {}", v.len())));
    }
    Ok(v)
}

/// Serializes with the requested indentation; keys come out sorted.
pub fn render(value: &Value, indent: Option<usize>) -> String {
    match indent {
        Some(n) if n > 0 => {
            let pad = " ".repeat(n);
            let fmt = serde_json::ser::PrettyFormatter::with_indent(pad.as_bytes());
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            value.serialize(&mut ser).expect("JSON value serializes");
            String::from_utf8(buf).expect("JSON is UTF-8")
        }
        _ => serde_json::to_string(value).expect("JSON value serializes"),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let indent = cli.json_indent;
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return failure(CliError::Usage(format!("threads: {e}")), indent),
    };
    match pool.install(|| commands::dispatch(&cli.command)) {
        Ok((value, passed)) => Output {
            code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            stdout: render(&value, indent) + "\n",
            stderr: String::new(),
        },
        Err(e) => failure(e, indent),
    }
}

fn failure(e: CliError, indent: Option<usize>) -> Output {
    let value = serde_json::json!({ "error": e.to_string() });
    Output { code: EXIT_USAGE, stdout: String::new(), stderr: render(&value, indent) + "\n" }
}
