//! The subcommands, as functions returning their rendered output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::json;

use schur_ratio::exact::rational::{from_big, to_exact_string, to_f64};
use schur_ratio::exact::{
    asymptotic_table, ratio_closed_form, ratio_gf_coefficients, ratio_recurrence_seq, ratio_sum_form,
    run_identity_suite, v0_exact, v1_exact_via_integral, IdentityRanges, RatioRecord,
};
use schur_ratio::region::{estimate_volumes, exact_reference, SamplerConfig};

use crate::report::{all_passed, envelope, render, render_checks, Cell, Check, Format, ReportRow, Table};
use crate::CliError;

pub const MAX_TABLE_DEGREE: u32 = 1000;

/// Rendered output of a command and whether its checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn new(output: String, passed: bool) -> Self {
        Outcome { output, passed }
    }
}

pub fn records(d_max: u32) -> Result<Vec<RatioRecord>, CliError> {
    let ratios = ratio_recurrence_seq(d_max)?;
    ratios.into_iter().enumerate().map(|(d, r)| Ok(RatioRecord::new(d as u32, r)?)).collect()
}

pub fn cmd_table(d_max: u32, format: Format) -> Result<Outcome, CliError> {
    if d_max > MAX_TABLE_DEGREE {
        return Err(CliError::Usage(format!("--d-max must be at most {MAX_TABLE_DEGREE}")));
    }
    let recs = records(d_max)?;
    let rows: Vec<ReportRow> = recs.iter().map(ReportRow::from).collect();
    let checks: Vec<Check> = recs
        .iter()
        .filter(|r| r.d == 2 || r.d == 3)
        .map(|r| {
            let ok = &r.v0 + &r.v1 == r.v_total;
            Check::new(format!("exhaustion_d{}", r.d), ok, format!("v0 + v1 = {}", r.v_total))
        })
        .collect();
    let config = json!({ "command": "table", "d_max": d_max, "format": format });
    let out = render(&Table::from(rows.as_slice()), format, config, &checks);
    Ok(Outcome::new(out, all_passed(&checks)))
}

/// Values of `r_d` by each exact route; `None` where a route does not apply.
pub fn ratio_routes(d: u32) -> Result<Vec<(&'static str, Option<BigInt>)>, CliError> {
    let closed = ratio_closed_form(d)?;
    let recurrence = ratio_recurrence_seq(d)?.pop().expect("non-empty");
    let series = ratio_gf_coefficients(d)?.pop().expect("non-empty");
    let (sum, integral) = if d >= 2 {
        let sum = ratio_sum_form(d)?;
        let q = v1_exact_via_integral(d)? / v0_exact(d);
        (Some(sum), q.is_integer().then(|| q.to_integer()))
    } else {
        (None, None)
    };
    Ok(vec![
        ("closed_form", Some(closed)),
        ("sum_form", sum),
        ("recurrence", Some(recurrence)),
        ("series", Some(series)),
        ("integral", integral),
    ])
}

pub fn cmd_ratio(d: u32) -> Result<Outcome, CliError> {
    let routes = ratio_routes(d)?;
    let mut out = String::new();
    writeln!(out, "d = {d}").unwrap();
    for (name, v) in &routes {
        let shown = v.as_ref().map_or("n/a".to_string(), |v| v.to_string());
        writeln!(out, "{name:<12} {shown}").unwrap();
    }
    if d >= 2 && routes[4].1.is_none() {
        writeln!(out, "integral route did not produce an integer ratio").unwrap();
    }
    let mut checks = Vec::new();
    let present: Vec<_> = routes.iter().filter_map(|(n, v)| v.as_ref().map(|v| (*n, v))).collect();
    for (i, (a, va)) in present.iter().enumerate() {
        for (b, vb) in &present[i + 1..] {
            checks.push(Check::new(format!("{a} = {b}"), va == vb, ""));
        }
    }
    if d >= 2 && routes[4].1.is_none() {
        checks.push(Check::new("integral integrality", false, ""));
    }
    out.push_str(&render_checks(&checks));
    Ok(Outcome::new(out, all_passed(&checks)))
}

pub fn mc_checks(est: &schur_ratio::region::VolumeEstimate) -> Vec<(Check, serde_json::Value)> {
    (0..est.hits.len())
        .filter_map(|s| {
            let exact = exact_reference(est.d, s)?;
            let exact_f = to_f64(&exact);
            let se = est.std_errors[s];
            let dev = est.estimates[s] - exact_f;
            let z = if se > 0.0 { dev / se } else { f64::INFINITY };
            let ok = dev.abs() < 3.0 * se;
            let detail = format!("estimate {:.6} vs exact {exact} ({exact_f:.6}), z = {z:.3}", est.estimates[s]);
            let entry = json!({
                "s": s,
                "exact": to_exact_string(&exact),
                "exact_float": exact_f,
                "estimate": est.estimates[s],
                "std_error": se,
                "z": z,
                "within_3_sigma": ok,
            });
            Some((Check::new(format!("v_{}^({s}) within 3 stderr", est.d), ok, detail), entry))
        })
        .collect()
}

/// Monte-Carlo estimate as JSON. The thread count is not part of the output, so runs that
/// differ only in `threads` are byte-identical.
pub fn cmd_mc(config: &SamplerConfig) -> Result<Outcome, CliError> {
    if config.d < 1 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    if config.samples < 1 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let est = estimate_volumes(config)?;
    let pairs = mc_checks(&est);
    let comparisons: Vec<_> = pairs.iter().map(|(_, v)| v.clone()).collect();
    let checks: Vec<Check> = pairs.into_iter().map(|(c, _)| c).collect();
    let cfg = json!({
        "command": "mc",
        "d": config.d,
        "samples": config.samples,
        "seed": config.seed,
        "chunk_size": config.chunk_size,
        "rng": est.rng,
    });
    let results = json!({ "estimate": est, "comparisons": comparisons });
    Ok(Outcome::new(envelope(cfg, results, &checks), all_passed(&checks)))
}

pub fn cmd_identities(ranges: &IdentityRanges) -> Result<Outcome, CliError> {
    let checks: Vec<Check> = run_identity_suite(ranges)
        .into_iter()
        .map(|o| {
            let detail = if o.passed() {
                format!("{} cases", o.cases)
            } else {
                format!("{} of {} cases failed; first: {}", o.failures.len(), o.cases, o.failures[0])
            };
            Check::new(o.name, o.passed(), detail)
        })
        .collect();
    Ok(Outcome::new(render_checks(&checks), all_passed(&checks)))
}

fn spread(v: &[f64]) -> f64 {
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min
}

/// Lowest degree from which the residual magnitude is required to decrease.
pub const MONOTONE_FROM: u32 = 30;
pub const LOG_WINDOW: (u32, u32) = (10, 60);
pub const LOG_WINDOW_WIDTH: f64 = 2.0;

/// Residual rows plus the monotonicity, constant-trend and log-window checks.
pub fn asymptotics_checks(from: u32, to: u32, precision_bits: usize) -> Result<(Table, Vec<Check>), CliError> {
    if from < 2 || from > to {
        return Err(CliError::Usage(format!("need 2 <= --from <= --to, got {from}..{to}")));
    }
    let rows = asymptotic_table(from, to, precision_bits)?;
    let recs = records(to)?;

    let mut table = Table {
        header: vec!["d", "ratio", "residual", "scaled_residual", "log_residual_p0", "log_residual_p1"],
        rows: Vec::new(),
    };
    for row in &rows {
        let rec = &recs[row.d as usize];
        let opt = |v: Option<f64>| v.map_or(Cell::Missing, Cell::Float);
        table.rows.push(vec![
            Cell::Int(row.d as i64),
            Cell::Exact(row.ratio.to_string()),
            Cell::Exact(row.residual.to_string()),
            Cell::Float(row.scaled_residual()),
            opt(rec.log_residual_p0()),
            opt(rec.log_residual_p1()),
        ]);
    }

    let mut checks = Vec::new();
    let tail: Vec<_> = rows.iter().filter(|r| r.d >= MONOTONE_FROM).collect();
    if tail.len() >= 2 {
        let bad: Vec<u32> =
            tail.windows(2).filter(|w| !w[1].residual.abs_less_than(&w[0].residual)).map(|w| w[1].d).collect();
        let lo = tail[0].d;
        checks.push(Check::new(
            "residual magnitude decreasing",
            bad.is_empty(),
            if bad.is_empty() { format!("d = {lo}..{to}") } else { format!("increases at d = {bad:?}") },
        ));
        let anchor = tail.last().unwrap().scaled_residual();
        let (min, max) =
            tail.iter().map(|r| r.scaled_residual()).fold((f64::INFINITY, 0.0f64), |(a, b), x| (a.min(x), b.max(x)));
        let ok = min >= anchor / 2.0 && max <= anchor * 2.0;
        checks.push(Check::new(
            "d*|residual| within factor 2 of its final value",
            ok,
            format!("range [{min:.6}, {max:.6}], final {anchor:.6}"),
        ));
    }
    let (wlo, whi) = (LOG_WINDOW.0.max(from), LOG_WINDOW.1.min(to));
    if wlo <= whi {
        let window = &recs[wlo as usize..=whi as usize];
        let r0: Vec<f64> = window.iter().filter_map(RatioRecord::log_residual_p0).collect();
        let r1: Vec<f64> = window.iter().filter_map(RatioRecord::log_residual_p1).collect();
        for (name, v) in [("log p0 residual window", r0), ("log p1 residual window", r1)] {
            let s = spread(&v);
            checks.push(Check::new(name, s < LOG_WINDOW_WIDTH, format!("max - min = {s:.6} over d = {wlo}..{whi}")));
        }
    }
    Ok((table, checks))
}

pub fn cmd_asymptotics(from: u32, to: u32, precision_bits: usize, format: Format) -> Result<Outcome, CliError> {
    let (table, checks) = asymptotics_checks(from, to, precision_bits)?;
    let out = match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let cfg = json!({
                "command": "asymptotics", "from": from, "to": to, "precision_bits": precision_bits,
            });
            envelope(cfg, table.to_json_rows(), &checks)
        }
    };
    Ok(Outcome::new(out, all_passed(&checks)))
}

pub fn cmd_series(terms: u32, format: Format) -> Result<Outcome, CliError> {
    if terms < 1 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let coeffs = ratio_gf_coefficients(terms - 1)?;
    let closed = ratio_recurrence_seq(terms - 1)?;
    let mut mismatches = Vec::new();
    let mut table = Table { header: vec!["d", "coefficient", "closed_form"], rows: Vec::new() };
    for (d, c) in coeffs.iter().enumerate() {
        let r = ratio_closed_form(d as u32)?;
        if *c != r || *c != closed[d] {
            mismatches.push(d);
        }
        table.rows.push(vec![Cell::Int(d as i64), Cell::Exact(c.to_string()), Cell::Exact(r.to_string())]);
    }
    let checks = vec![Check::new(
        "series coefficients = closed form",
        mismatches.is_empty(),
        if mismatches.is_empty() { format!("{terms} terms") } else { format!("differ at {mismatches:?}") },
    )];
    let out = match format {
        Format::Csv => table.to_csv(),
        Format::Json => envelope(json!({ "command": "series", "terms": terms }), table.to_json_rows(), &checks),
    };
    Ok(Outcome::new(out, all_passed(&checks)))
}

/// Exact `r_d` as a rational, for comparisons against volume quotients.
pub fn ratio_as_rational(d: u32) -> Result<schur_ratio::ExactRational, CliError> {
    Ok(from_big(ratio_closed_form(d)?))
}
