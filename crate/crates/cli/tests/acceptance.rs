//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the lines always appear in the
//! `cargo test` output.

use std::process::ExitCode;
use std::time::Instant;

use schur_ratio::exact::rational::{frac, from_big, int};
use schur_ratio::exact::{
    associated_legendre_rho, fam_volume, legendre, probability_records, ratio_closed_form, ratio_gf_coefficients,
    ratio_recurrence_seq, ratio_sum_form, run_identity_suite, v0_exact, v1_exact_via_integral, IdentityRanges,
    RatioRecord,
};
use schur_ratio::region::{estimate_volumes, exact_oracle_d2, SamplerConfig};
use schur_ratio::ExactRational;
use schur_ratio_cli::commands::{asymptotics_checks, cmd_mc};

type Verdict = Result<String, String>;

fn ensure(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Verdict {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn criterion_1() -> Verdict {
    let rec = ratio_recurrence_seq(200).map_err(|e| e.to_string())?;
    let series = ratio_gf_coefficients(200).map_err(|e| e.to_string())?;
    for d in 2..=200u32 {
        let p3 = legendre(d, &int(3)).map_err(|e| e.to_string())?;
        let numer = p3 - int(2 * d as i64 + 1);
        let quarter = &numer / int(4);
        if !quarter.is_integer() {
            return Err(format!("P_d(3) - 2d - 1 not divisible by 4 at d = {d}"));
        }
        let closed = ratio_closed_form(d).map_err(|e| e.to_string())?;
        let mut agree =
            from_big(closed.clone()) == quarter && closed == rec[d as usize] && closed == series[d as usize];
        if d <= 30 {
            agree &= closed == ratio_sum_form(d).map_err(|e| e.to_string())?;
        }
        if !agree {
            return Err(format!("pipelines disagree at d = {d}"));
        }
    }
    Ok("2 <= d <= 200: divisibility and closed = recurrence = series; sum form for d <= 30".into())
}

fn criterion_2() -> Verdict {
    for d in 2..=30u32 {
        let v1 = v1_exact_via_integral(d).map_err(|e| e.to_string())?;
        let r = ratio_closed_form(d).map_err(|e| e.to_string())?;
        if v1 / v0_exact(d) != from_big(r) {
            return Err(format!("v1/v0 differs from r_d at d = {d}"));
        }
    }
    Ok("v1 via integral / v0 = r_d for 2 <= d <= 30".into())
}

fn criterion_3() -> Verdict {
    let sum = |d: u32| -> Result<ExactRational, String> {
        Ok(v0_exact(d) + v1_exact_via_integral(d).map_err(|e| e.to_string())?)
    };
    let (s2, s3) = (sum(2)?, sum(3)?);
    let oracle = exact_oracle_d2();
    let expected = (int(4), frac(4, 3), frac(8, 3));
    ensure(
        s2 == int(4) && s3 == frac(16, 3) && oracle == expected && fam_volume(2) == Ok(int(4)),
        format!("v_2^(0) + v_2^(1) = {s2}, v_3^(0) + v_3^(1) = {s3}, d=2 oracle = (4, 4/3, 8/3)"),
        format!("got {s2}, {s3}, oracle ({}, {}, {})", oracle.0, oracle.1, oracle.2),
    )
}

fn criterion_4() -> Verdict {
    let outcomes = run_identity_suite(&IdentityRanges::default());
    let cases: usize = outcomes.iter().map(|o| o.cases).sum();
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
    // The rho family is also checked directly against 2d + 1.
    let mut rho_ok = true;
    for d in 0..=200u32 {
        let rho = associated_legendre_rho(d, &int(-4)).map_err(|e| e.to_string())?;
        let signed = if d % 2 == 0 { rho } else { -rho };
        rho_ok &= signed == int(2 * d as i64 + 1);
    }
    ensure(
        failed.is_empty() && rho_ok,
        format!("{} families, {cases} cases, (-1)^d rho_d(-4) = 2d + 1 for d <= 200", outcomes.len()),
        format!("failing families {failed:?}, rho ok = {rho_ok}"),
    )
}

fn criterion_5() -> Verdict {
    // Exact volumes, written out independently of the engine.
    let exact: [(usize, usize, ExactRational); 7] = [
        (2, 0, frac(4, 3)),
        (2, 1, frac(8, 3)),
        (3, 0, frac(16, 45)),
        (3, 1, frac(224, 45)),
        (4, 0, frac(64, 1575)),
        (4, 1, frac(1664, 525)),
        (4, 2, frac(2048, 525)),
    ];
    let mut details = Vec::new();
    for d in 2..=4usize {
        let est = estimate_volumes(&SamplerConfig::new(d, 1_000_000)).map_err(|e| e.to_string())?;
        for (_, s, v) in exact.iter().filter(|(dd, _, _)| *dd == d) {
            let target = schur_ratio::exact::rational::to_f64(v);
            let z = (est.estimates[*s] - target) / est.std_errors[*s];
            details.push(format!("({d},{s}) z={z:+.2}"));
            if z.abs() > 3.0 || !z.is_finite() {
                return Err(format!("v_{d}^({s}): estimate {} vs {v}, z = {z:.3}", est.estimates[*s]));
            }
        }
    }
    Ok(format!("10^6 samples per degree: {}", details.join(", ")))
}

fn criterion_6() -> Verdict {
    let (_, checks) = asymptotics_checks(30, 200, 128).map_err(|e| e.to_string())?;
    let wanted = ["residual magnitude decreasing", "d*|residual| within factor 2 of its final value"];
    let relevant: Vec<_> = checks.iter().filter(|c| wanted.contains(&c.name.as_str())).collect();
    let lines: Vec<String> = relevant.iter().map(|c| c.line()).collect();
    ensure(
        relevant.len() == 2 && relevant.iter().all(|c| c.passed),
        format!("128 bits, 30 <= d <= 200: {}", lines.join("; ")),
        lines.join("; "),
    )
}

fn spread(v: &[f64]) -> f64 {
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min
}

fn criterion_7() -> Verdict {
    let recs = probability_records(60).map_err(|e| e.to_string())?;
    let window = &recs[10..=60];
    let r0: Vec<f64> = window.iter().filter_map(RatioRecord::log_residual_p0).collect();
    let r1: Vec<f64> = window.iter().filter_map(RatioRecord::log_residual_p1).collect();
    let (s0, s1) = (spread(&r0), spread(&r1));
    ensure(
        r0.len() == 51 && r1.len() == 51 && s0 < 2.0 && s1 < 2.0,
        format!("10 <= d <= 60: spread p0 = {s0:.4}, p1 = {s1:.4}"),
        format!("spread p0 = {s0:.4}, p1 = {s1:.4}"),
    )
}

fn criterion_8() -> Verdict {
    let run = |threads| {
        let cfg = SamplerConfig { threads: Some(threads), ..SamplerConfig::new(4, 200_000) };
        cmd_mc(&cfg).map(|o| o.output).map_err(|e| e.to_string())
    };
    let (one, eight) = (run(1)?, run(8)?);
    ensure(
        one.as_bytes() == eight.as_bytes(),
        format!("d = 4, 200000 samples: {} identical bytes at 1 and 8 threads", one.len()),
        "outputs differ between 1 and 8 threads",
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Verdict); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failures = 0;
    for (n, f) in criteria {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {n}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {n}: {detail} [{secs:.1}s]");
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
