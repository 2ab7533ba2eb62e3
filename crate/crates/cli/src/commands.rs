use std::sync::Arc;

use lrbox_boxspline::{lattice_table, r_polynomial, BoxSpline};
use lrbox_core::rational::format_rational;
use lrbox_core::RationalVector;
use lrbox_deconv::{finite_difference_inversion, multiplicities_from_j_algorithmic, multiplicities_from_j_fourier};
use lrbox_multoracle::Oracle;
use lrbox_rootsys::{RootSystem, Weight};
use lrbox_volumefn::VolumeContext;
use lrbox_weightmult::{kostka_fd_inversion, kostka_from_i_fourier};
use serde_json::{json, Value};

use crate::verify::run_suite;
use crate::{parse_algebra, parse_floats, parse_ints, parse_rationals, parse_weight, CliError, Command, DeconvMethod, KostkaMethod};

fn count(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn context(rs: Arc<RootSystem>) -> Result<VolumeContext, CliError> {
    Ok(VolumeContext::new(rs)?)
}

fn deconv_entry(nu: &Weight, c: u64, method: &str) -> Value {
    json!({ "nu": nu.coords, "C": c, "method": method })
}

fn method_name(m: DeconvMethod) -> &'static str {
    match m {
        DeconvMethod::Algo => "algo",
        DeconvMethod::Fourier => "fourier",
        DeconvMethod::Findiff => "findiff",
    }
}

/// Runs one command; the flag is false when an identity check failed.
pub(crate) fn dispatch(cmd: &Command) -> Result<(Value, bool), CliError> {
    match cmd {
        Command::Lr { algebra, lambda, mu, nu } => {
            let rs = parse_algebra(algebra)?;
            let lambda = parse_weight(&rs, lambda, "lambda", true)?;
            let mu = parse_weight(&rs, mu, "mu", true)?;
            let oracle = Oracle::new(rs.clone());
            match nu {
                Some(nu) => {
                    let nu = parse_weight(&rs, nu, "nu", true)?;
                    Ok((json!({ "value": oracle.lr_coefficient(&lambda, &mu, &nu)? }), true))
                }
                None => {
                    let table: Vec<Value> = oracle
                        .tensor_decomposition(&lambda, &mu)?
                        .iter()
                        .map(|(nu, c)| json!({ "nu": nu.coords, "value": c }))
                        .collect();
                    Ok((json!({ "decomposition": table }), true))
                }
            }
        }
        Command::Kostka { algebra, lambda, mu, method } => {
            let rs = parse_algebra(algebra)?;
            let lambda = parse_weight(&rs, lambda, "lambda", true)?;
            let mu = parse_weight(&rs, mu, "mu", false)?;
            let value = match method {
                KostkaMethod::Kostant => Oracle::new(rs).weight_multiplicity(&lambda, &mu)?,
                KostkaMethod::Fourier => kostka_from_i_fourier(&context(rs)?, &lambda, &mu)?,
                KostkaMethod::Findiff => kostka_fd_inversion(&context(rs)?, &lambda, &mu)?,
            };
            Ok((json!({ "value": value }), true))
        }
        Command::Partition { algebra, point } => {
            let rs = parse_algebra(algebra)?;
            let tau = parse_ints(point, rs.rank, "point")?;
            Ok((json!({ "value": count(Oracle::new(rs).kostant_partition(&tau)) }), true))
        }
        Command::Boxspline { algebra, point, table, rpoly } => {
            let rs = parse_algebra(algebra)?;
            let spline = BoxSpline::new(rs.clone())?;
            if let Some(p) = point {
                let c = RationalVector::new(parse_rationals(p, rs.rank, "point")?);
                let b = spline.density_root_coords(&c)?;
                return Ok((json!({ "value": format_rational(&b) }), true));
            }
            let t = lattice_table(&spline);
            if let Some(x) = rpoly {
                let x = parse_floats(x, rs.ambient, "rpoly")?;
                return Ok((json!({ "value": r_polynomial(&t, &x) }), true));
            }
            if !*table {
                return Err(CliError::Usage("boxspline: give --point, --table or --rpoly".into()));
            }
            Ok((t.lattice_values.to_json_value(), true))
        }
        Command::Volume { algebra, lambda, mu, gamma, lattice } => {
            let rs = parse_algebra(algebra)?;
            let lambda = parse_weight(&rs, lambda, "lambda", true)?;
            let mu = parse_weight(&rs, mu, "mu", true)?;
            let ctx = context(rs.clone())?;
            let ev = ctx.evaluator(&lambda, &mu)?;
            match (gamma, lattice) {
                (Some(g), false) => {
                    let g = RationalVector::new(parse_rationals(g, rs.rank, "gamma")?);
                    let j = ev.volume_j(&rs.from_weight_coords_rat(&g))?;
                    Ok((json!({ "value": format_rational(&j) }), true))
                }
                (None, true) => Ok((ev.volume_lattice_measure().to_json_value(), true)),
                _ => Err(CliError::Usage("volume: give exactly one of --gamma and --lattice".into())),
            }
        }
        Command::Deconv { algebra, lambda, mu, method, nu } => {
            let rs = parse_algebra(algebra)?;
            let lambda = parse_weight(&rs, lambda, "lambda", true)?;
            let mu = parse_weight(&rs, mu, "mu", true)?;
            let nu = nu.as_ref().map(|s| parse_weight(&rs, s, "nu", true)).transpose()?;
            let ctx = context(rs.clone())?;
            let name = method_name(*method);
            match (method, nu) {
                (DeconvMethod::Algo, nu) => {
                    let table = multiplicities_from_j_algorithmic(&ctx, &lambda, &mu)?;
                    match nu {
                        Some(nu) => Ok((deconv_entry(&nu, table.get(&nu).copied().unwrap_or(0), name), true)),
                        None => Ok((Value::Array(table.iter().map(|(nu, c)| deconv_entry(nu, *c, name)).collect()), true)),
                    }
                }
                (DeconvMethod::Fourier, Some(nu)) => {
                    let c = multiplicities_from_j_fourier(&ctx, &lambda, &mu, &nu)?;
                    Ok((deconv_entry(&nu, c, name), true))
                }
                (DeconvMethod::Fourier, None) => {
                    // Candidates are the dominant points of the support of J, shifted back by rho.
                    let j = ctx.evaluator(&lambda, &mu)?.volume_lattice_measure();
                    let mut out = Vec::new();
                    for (k, _) in j.iter().filter(|(k, _)| k.iter().all(|&c| c >= 1)) {
                        let nu = Weight::new(k.iter().map(|c| c - 1).collect());
                        let c = multiplicities_from_j_fourier(&ctx, &lambda, &mu, &nu)?;
                        if c > 0 {
                            out.push(deconv_entry(&nu, c, name));
                        }
                    }
                    Ok((Value::Array(out), true))
                }
                (DeconvMethod::Findiff, Some(nu)) => {
                    let c = finite_difference_inversion(&ctx, &lambda, &mu, &nu)?;
                    Ok((deconv_entry(&nu, c, name), true))
                }
                (DeconvMethod::Findiff, None) => Err(CliError::Usage("deconv --method findiff needs --nu".into())),
            }
        }
        Command::Rpoly { algebra, point } => {
            let rs = parse_algebra(algebra)?;
            let x = parse_floats(point, rs.ambient, "point")?;
            let t = lattice_table(&BoxSpline::new(rs)?);
            Ok((json!({ "value": r_polynomial(&t, &x) }), true))
        }
        Command::Verify { algebra, suite } => {
            let rs = parse_algebra(algebra)?;
            let report = run_suite(&context(rs)?, *suite)?;
            let passed = report.passed();
            Ok((report.to_json(), passed))
        }
    }
}
