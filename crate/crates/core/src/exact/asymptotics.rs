//! Relative error of the singularity-analysis leading term for `r_d`.
//!
//! `L(d) = (3 + 2 sqrt 2)^{d + 1/2} / (8 * 2^{1/4} * sqrt(pi d))`. Everything is evaluated
//! in logarithms with software floating point of selectable precision, so `d` in the
//! thousands is fine.

use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, Sign};

use super::ratio::ratio_recurrence_seq;
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;
pub const MIN_PRECISION_BITS: usize = 64;

/// A software floating-point value and the precision it was computed at.
#[derive(Debug, Clone)]
pub struct HighPrecision {
    value: BigFloat,
    precision_bits: usize,
}

impl HighPrecision {
    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.value
    }

    /// `|self| < |other|`, decided by an exact-width subtraction.
    pub fn abs_less_than(&self, other: &HighPrecision) -> bool {
        let p = self.precision_bits.max(other.precision_bits) + 64;
        let diff = other.value.abs().sub(&self.value.abs(), p, RM);
        !diff.is_nan() && !diff.is_zero() && diff.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_string().parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for HighPrecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `r_d / L(d) - 1` for one degree.
#[derive(Debug, Clone)]
pub struct AsymptoticRow {
    pub d: u32,
    pub ratio: BigInt,
    pub residual: HighPrecision,
}

impl AsymptoticRow {
    /// `d * |residual|`, which should settle to a constant.
    pub fn scaled_residual(&self) -> f64 {
        self.d as f64 * self.residual.to_f64().abs()
    }
}

fn consts() -> Result<Consts> {
    Consts::new().map_err(|e| Error::Precision(format!("constant cache unavailable: {e:?}")))
}

fn bigint_to_float(n: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&n.to_string(), Radix::Dec, p, RM, cc)
}

/// `ln L(d)` at precision `p`.
pub fn leading_term_ln(d: u32, p: usize, cc: &mut Consts) -> BigFloat {
    let f = |v: u64| BigFloat::from_u64(v, p);
    let ln2 = cc.ln_2(p, RM);
    let base = f(3).add(&f(2).sqrt(p, RM).mul(&f(2), p, RM), p, RM);
    let exponent = f(2 * d as u64 + 1).div(&f(2), p, RM);
    let growth = exponent.mul(&base.ln(p, RM, cc), p, RM);
    // ln(8 * 2^{1/4}) = (13/4) ln 2
    let const_part = ln2.mul(&f(13), p, RM).div(&f(4), p, RM);
    let pi_d = cc.pi(p, RM).mul(&f(d as u64), p, RM);
    let root_part = pi_d.ln(p, RM, cc).div(&f(2), p, RM);
    growth.sub(&const_part, p, RM).sub(&root_part, p, RM)
}

/// `r_d / L(d) - 1` for a known ratio `r_d`.
pub fn residual_for(d: u32, ratio: &BigInt, precision_bits: usize) -> Result<HighPrecision> {
    if d < 2 {
        return Err(Error::domain("asymptotic_residual", "degree must be at least 2"));
    }
    if precision_bits < MIN_PRECISION_BITS {
        return Err(Error::Precision(format!(
            "{precision_bits} bits requested, at least {MIN_PRECISION_BITS} required"
        )));
    }
    if ratio.sign() != Sign::Plus {
        return Err(Error::domain("asymptotic_residual", format!("r_{d} = {ratio} is not positive")));
    }
    let p = precision_bits;
    let mut cc = consts()?;
    let ln_r = bigint_to_float(ratio, p, &mut cc).ln(p, RM, &mut cc);
    let ln_l = leading_term_ln(d, p, &mut cc);
    let value = ln_r.sub(&ln_l, p, RM).exp(p, RM, &mut cc).sub(&BigFloat::from_u64(1, p), p, RM);

    // Cancellation in ln r - ln L costs about log2(ln r) bits; demand a wide margin.
    let magnitude_bits = ratio.bits().max(2).ilog2() as i64 + 1;
    let usable_bits = p as i64 - magnitude_bits - 16;
    let resolved = HighPrecision { value, precision_bits: p };
    let r = resolved.to_f64().abs();
    if usable_bits <= 0 || (r != 0.0 && r.log2() < -(usable_bits as f64)) || r == 0.0 {
        return Err(Error::Precision(format!("{p} bits cannot resolve the residual at d={d} (|residual| ~ {r:e})")));
    }
    Ok(resolved)
}

/// `r_d / L(d) - 1`, with `r_d` taken from the recurrence.
pub fn asymptotic_residual(d: u32, precision_bits: usize) -> Result<HighPrecision> {
    let seq = ratio_recurrence_seq(d)?;
    residual_for(d, &seq[d as usize], precision_bits)
}

/// Residual rows for every `d` in `from..=to`.
pub fn asymptotic_table(from: u32, to: u32, precision_bits: usize) -> Result<Vec<AsymptoticRow>> {
    if from < 2 || from > to {
        return Err(Error::domain("asymptotic_table", format!("bad range {from}..={to}")));
    }
    let seq = ratio_recurrence_seq(to)?;
    (from..=to)
        .map(|d| {
            let ratio = seq[d as usize].clone();
            let residual = residual_for(d, &ratio, precision_bits)?;
            Ok(AsymptoticRow { d, ratio, residual })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_shrinks() {
        let rows = asymptotic_table(20, 200, 128).unwrap();
        for w in rows.windows(2) {
            let (a, b) = (w[0].residual.to_f64().abs(), w[1].residual.to_f64().abs());
            assert!(b < a, "not decreasing at d={}", w[1].d);
            assert!(w[1].residual.abs_less_than(&w[0].residual));
            assert!(!w[0].residual.abs_less_than(&w[1].residual));
        }
    }

    #[test]
    fn d50_regression_baseline() {
        // Frozen from the first run; independently reproduced with a 200-bit mpmath evaluation.
        let r = asymptotic_residual(50, 128).unwrap().to_f64();
        assert!((r + 0.002_343_928_620_928_006_6).abs() < 1e-15, "{r}");
    }

    #[test]
    fn scaled_residual_settles() {
        let rows = asymptotic_table(100, 400, 160).unwrap();
        let first = rows.first().unwrap().scaled_residual();
        let last = rows.last().unwrap().scaled_residual();
        assert!((first - last).abs() < 0.01 * last, "{first} vs {last}");
        assert!(last > 0.1173 && last < 0.1175, "{last}");
    }

    #[test]
    fn precision_is_validated() {
        assert!(matches!(asymptotic_residual(30, 32), Err(Error::Precision(_))));
        assert!(matches!(asymptotic_residual(1, 128), Err(Error::Domain { .. })));
    }

    #[test]
    fn large_degree_stays_finite() {
        let r = asymptotic_residual(1500, 256).unwrap().to_f64();
        assert!(r.is_finite() && r.abs() < 1e-3);
    }
}
