//! The full exact invariant suite behind `verify`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schur_ratio::exact::rational::{frac, from_big, int};
use schur_ratio::exact::{
    fam_volume, inner_double_integral, inner_double_integral_expanded, legendre_via, ratio_closed_form,
    ratio_gf_coefficients, ratio_recurrence_seq, ratio_sum_form, run_identity_suite, v0_exact, v1_exact_via_integral,
    IdentityRanges, LegendrePath,
};
use schur_ratio::region::{
    classify, classify_integer, coefficient_box, estimate_volumes, exact_oracle_d2, schur_cohn_stable, CoefficientBox,
    MonicPolynomial, RootClassification, SamplerConfig,
};
use schur_ratio::ExactRational;

use crate::report::Check;
use crate::CliError;

pub const RATIO_MAX_D: u32 = 200;
pub const SUM_FORM_MAX_D: u32 = 30;
pub const LEGENDRE_MAX_D: u32 = 100;
pub const CLASSIFY_SAMPLES_PER_DEGREE: u64 = 2000;

fn check(name: &str, body: impl FnOnce() -> Result<(bool, String), CliError>) -> Check {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok((ok, detail))) => Check::new(name, ok, detail),
        Ok(Err(e)) => Check::new(name, false, e.to_string()),
        Err(_) => Check::new(name, false, "panicked"),
    }
}

fn first_failure<I: IntoIterator<Item = (u32, bool)>>(it: I) -> Option<u32> {
    it.into_iter().find(|(_, ok)| !ok).map(|(d, _)| d)
}

pub fn ratio_agreement() -> Check {
    check("four-way ratio agreement", || {
        let rec = ratio_recurrence_seq(RATIO_MAX_D)?;
        let series = ratio_gf_coefficients(RATIO_MAX_D)?;
        for d in 0..=RATIO_MAX_D {
            let closed = ratio_closed_form(d)?;
            let mut ok = closed == rec[d as usize] && closed == series[d as usize];
            if (2..=SUM_FORM_MAX_D).contains(&d) {
                ok &= closed == ratio_sum_form(d)?;
            }
            if !ok {
                return Ok((false, format!("routes disagree at d = {d}")));
            }
        }
        Ok((true, format!("d <= {RATIO_MAX_D}, sum form d <= {SUM_FORM_MAX_D}")))
    })
}

pub fn formula_chain() -> Check {
    check("v1/v0 via integral = closed form", || {
        let bad = first_failure((2..=SUM_FORM_MAX_D).map(|d| {
            let q = v1_exact_via_integral(d).map(|v1| v1 / v0_exact(d));
            let r = ratio_closed_form(d).map(from_big);
            (d, matches!((q, r), (Ok(a), Ok(b)) if a == b))
        }));
        Ok(match bad {
            None => (true, format!("2 <= d <= {SUM_FORM_MAX_D}")),
            Some(d) => (false, format!("mismatch at d = {d}")),
        })
    })
}

pub fn exhaustion() -> Check {
    check("low-degree exhaustion and d=2 oracle", || {
        let mut ok = true;
        for d in [2, 3] {
            ok &= v0_exact(d) + v1_exact_via_integral(d)? == fam_volume(d)?;
        }
        let (t, r, c) = exact_oracle_d2();
        ok &= (t.clone(), r.clone(), c.clone()) == (int(4), frac(4, 3), frac(8, 3));
        ok &= t == fam_volume(2)? && r == v0_exact(2) && c == v1_exact_via_integral(2)?;
        Ok((ok, format!("oracle (v_2, v_2^(0), v_2^(1)) = ({t}, {r}, {c})")))
    })
}

pub fn legendre_paths() -> Check {
    check("Legendre routes and parity", || {
        let points = [int(3), int(-3), int(1), int(0), frac(7, 2)];
        for d in 0..=LEGENDRE_MAX_D {
            for x in &points {
                let a = legendre_via(LegendrePath::Alternating, d, x);
                let ok =
                    a == legendre_via(LegendrePath::Shifted, d, x) && a == legendre_via(LegendrePath::Recurrence, d, x);
                let refl = legendre_via(LegendrePath::Recurrence, d, &-x);
                let parity = if d % 2 == 0 { refl == a } else { refl == -a };
                if !(ok && parity) {
                    return Ok((false, format!("d = {d}, x = {x}")));
                }
            }
        }
        Ok((true, format!("d <= {LEGENDRE_MAX_D} at x in {{3, -3, 1, 0, 7/2}}")))
    })
}

pub fn identity_checks() -> Vec<Check> {
    run_identity_suite(&IdentityRanges::default())
        .into_iter()
        .map(|o| {
            let detail = match o.failures.first() {
                None => format!("{} cases", o.cases),
                Some(f) => format!("{} failures; first: {f}", o.failures.len()),
            };
            Check::new(format!("identity {}", o.name), o.passed(), detail)
        })
        .collect()
}

pub fn inner_integral() -> Check {
    check("inner double integral, two routes", || {
        for j in 0..=6 {
            for k in 0..=6 {
                if inner_double_integral(j, k) != inner_double_integral_expanded(j, k) {
                    return Ok((false, format!("j = {j}, k = {k}")));
                }
            }
        }
        Ok((true, "j, k <= 6".into()))
    })
}

pub fn canonical_form() -> Check {
    check("rationals in lowest terms", || {
        let recs = crate::commands::records(40)?;
        let canonical = |q: &ExactRational| {
            let g = q.numer().gcd(q.denom());
            g == 1.into() && q.denom() > &0.into()
        };
        let ok = recs.iter().all(|r| [&r.v_total, &r.v0, &r.v1, &r.p0, &r.p1].into_iter().all(canonical));
        Ok((ok, "records d <= 40".into()))
    })
}

pub fn region_examples() -> Check {
    check("Schur-Cohn and classification examples", || {
        let mp = |c: Vec<ExactRational>| MonicPolynomial::new(c).expect("degree >= 1");
        let mut ok = schur_cohn_stable(&mp(vec![int(0), int(0)]));
        ok &= !schur_cohn_stable(&mp(vec![int(0), int(3)]));
        ok &= !schur_cohn_stable(&mp(vec![int(-2), int(1)]));
        ok &= classify(&mp(vec![int(0), frac(1, 2), int(0)])) == RootClassification::Classified { s: 1, real_roots: 1 };
        ok &= classify(&mp(vec![int(0), frac(-1, 4)])) == RootClassification::Classified { s: 0, real_roots: 2 };
        ok &= matches!(classify(&mp(vec![int(-1), frac(1, 4)])), RootClassification::Degenerate(_));
        Ok((ok, String::new()))
    })
}

/// Classification agrees with the membership test, stable samples lie in the envelope, and the
/// real-root count over the line equals the count in (-1, 1) (asserted inside `classify`).
pub fn classify_consistency() -> Check {
    check("classify / Schur-Cohn / integer-route consistency", || {
        let mut degenerate = 0;
        for d in 2..=6usize {
            // Draw from twice the envelope so the containment check can fail.
            let envelope = coefficient_box(d)?;
            let half = envelope.half_widths_exact();
            let cbox = CoefficientBox { half_widths: envelope.half_widths.iter().map(|h| h * 2).collect() };
            let mut stream = ChaCha8Rng::seed_from_u64(0xc1a5_5000 + d as u64);
            for _ in 0..CLASSIFY_SAMPLES_PER_DEGREE {
                let scaled = cbox.sample_scaled(&mut stream);
                let p = MonicPolynomial::new(
                    scaled[1..].iter().map(|n| ExactRational::new(n.clone(), scaled[0].clone())).collect(),
                )?;
                let stable = schur_cohn_stable(&p);
                let c = classify(&p);
                if matches!(c, RootClassification::Unstable) == stable {
                    return Ok((false, format!("disagreement at d = {d}")));
                }
                let fast = classify_integer(&scaled);
                if std::mem::discriminant(&fast) != std::mem::discriminant(&c) || fast.pairs() != c.pairs() {
                    return Ok((false, format!("integer and rational routes differ at d = {d}")));
                }
                if stable && !p.within(&half) {
                    return Ok((false, format!("stable sample outside the box at d = {d}")));
                }
                if let RootClassification::Classified { s, real_roots } = c {
                    if real_roots + 2 * s != d {
                        return Ok((false, format!("root count mismatch at d = {d}")));
                    }
                }
                if matches!(c, RootClassification::Degenerate(_)) {
                    degenerate += 1;
                }
            }
        }
        Ok((true, format!("{CLASSIFY_SAMPLES_PER_DEGREE} samples per d in 2..=6, {degenerate} degenerate")))
    })
}

pub fn sampler_determinism() -> Check {
    check("sampler determinism and counting identity", || {
        let mut cfg = SamplerConfig::new(3, 3000);
        cfg.chunk_size = 256;
        cfg.threads = Some(1);
        let a = estimate_volumes(&cfg)?;
        cfg.threads = Some(2);
        let b = estimate_volumes(&cfg)?;
        let counted = a.hits.iter().sum::<u64>() + a.degenerate + a.misses == a.total_samples;
        Ok((a == b && counted, "d = 3, 3000 samples, 1 vs 2 threads".into()))
    })
}

pub fn run_all() -> Vec<Check> {
    let mut checks =
        vec![ratio_agreement(), formula_chain(), exhaustion(), legendre_paths(), inner_integral(), canonical_form()];
    checks.extend(identity_checks());
    checks.extend([region_examples(), classify_consistency(), sampler_determinism()]);
    checks
}
