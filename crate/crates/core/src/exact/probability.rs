//! Per-degree bundle of volumes and the probabilities `p_d^(s) = v_d^(s) / v_d`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ratio::ratio_recurrence_seq;
use super::rational::{from_big, int, ln_rational, ExactRational};
use super::volumes::{fam_volume, v0_exact};
use crate::error::{Error, Result};

/// Exact volumes and probabilities at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRecord {
    pub d: u32,
    /// `r_d = v_d^(1) / v_d^(0)`.
    pub ratio: BigInt,
    pub v_total: ExactRational,
    pub v0: ExactRational,
    pub v1: ExactRational,
    pub p0: ExactRational,
    pub p1: ExactRational,
}

impl RatioRecord {
    /// Builds the record from `r_d`. At `d = 0` the region is the single point of `R^0`
    /// and `v_0 = 1`, which is also what the even product formula gives at `m = 0`.
    pub fn new(d: u32, ratio: BigInt) -> Result<Self> {
        let v_total = if d == 0 { int(1) } else { fam_volume(d)? };
        let v0 = v0_exact(d);
        let v1 = &v0 * from_big(ratio.clone());
        let p0 = &v0 / &v_total;
        let p1 = &v1 / &v_total;
        Ok(RatioRecord { d, ratio, v_total, v0, v1, p0, p1 })
    }

    /// `ln p_d^(0) + (ln 2 / 2) d^2 - (1/8) ln d`; bounded as `d` grows.
    pub fn log_residual_p0(&self) -> Option<f64> {
        if self.d == 0 {
            return None;
        }
        let d = self.d as f64;
        Some(ln_rational(&self.p0) + std::f64::consts::LN_2 / 2.0 * d * d - d.ln() / 8.0)
    }

    /// `ln p_d^(1) + (ln 2 / 2) d^2 - d ln(3 + 2 sqrt 2)`; grows at most like `ln d`.
    pub fn log_residual_p1(&self) -> Option<f64> {
        if self.p1.is_zero() {
            return None;
        }
        let d = self.d as f64;
        let growth = (3.0 + 2.0 * std::f64::consts::SQRT_2).ln();
        Some(ln_rational(&self.p1) + std::f64::consts::LN_2 / 2.0 * d * d - d * growth)
    }
}

/// Records for `d = 0..=d_max`, with `r_d` from the recurrence.
pub fn probability_records(d_max: u32) -> Result<Vec<RatioRecord>> {
    if d_max < 2 {
        return Err(Error::domain("probability_records", "d_max must be at least 2"));
    }
    let ratios = ratio_recurrence_seq(d_max)?;
    ratios.into_iter().enumerate().map(|(d, r)| RatioRecord::new(d as u32, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;
    use crate::exact::volumes::v1_exact_via_integral;

    #[test]
    fn low_degree_probabilities() {
        let recs = probability_records(4).unwrap();
        assert_eq!(recs[2].p0, frac(1, 3));
        assert_eq!(recs[2].p1, frac(2, 3));
        assert_eq!(recs[3].p0, frac(1, 15));
        assert_eq!(recs[3].p1, frac(14, 15));
        assert_eq!(recs[0].ratio, BigInt::zero());
        assert_eq!(recs[0].v_total, int(1));
    }

    #[test]
    fn record_invariants() {
        for rec in probability_records(25).unwrap() {
            assert_eq!(rec.v1, &rec.v0 * from_big(rec.ratio.clone()));
            assert_eq!(rec.p0, &rec.v0 / &rec.v_total);
            if rec.d >= 2 {
                assert_eq!(&rec.p1 / &rec.p0, from_big(rec.ratio.clone()));
            }
            if rec.d == 2 || rec.d == 3 {
                assert_eq!(&rec.v0 + &rec.v1, rec.v_total);
            }
        }
    }

    #[test]
    fn v1_matches_integral_route() {
        let recs = probability_records(8).unwrap();
        for rec in &recs[2..] {
            assert_eq!(rec.v1, v1_exact_via_integral(rec.d).unwrap());
        }
    }

    #[test]
    fn log_residuals_stay_bounded() {
        let recs = probability_records(60).unwrap();
        let r0: Vec<f64> = recs[10..].iter().map(|r| r.log_residual_p0().unwrap()).collect();
        let r1: Vec<f64> = recs[10..].iter().map(|r| r.log_residual_p1().unwrap()).collect();
        let spread =
            |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread(&r0) < 2.0);
        assert!(spread(&r1) < 2.0);
        assert_eq!(recs[1].log_residual_p1(), None);
    }
}
