//! Truncated power series over exact rationals, and the generating function of `r_d`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{as_integer, int, ExactRational};
use crate::error::{Error, Result};

/// Power series `sum c_i z^i` known modulo `z^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<ExactRational>,
}

impl PowerSeries {
    /// Builds a series truncated to `order` terms; missing coefficients are zero.
    pub fn new(mut coefficients: Vec<ExactRational>, order: usize) -> Self {
        coefficients.resize(order, ExactRational::zero());
        PowerSeries { coefficients }
    }

    pub fn from_integers(coefficients: &[i64], order: usize) -> Self {
        Self::new(coefficients.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_integers(&[1], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// Coefficient of `z^i`; zero beyond the truncation order.
    pub fn coefficient(&self, i: usize) -> ExactRational {
        self.coefficients.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coefficients.iter().take(order).cloned().collect(), order)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        PowerSeries { coefficients: self.coefficients.iter().map(|x| x * c).collect() }
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coefficients.iter().map(as_integer).collect()
    }

    /// `1 / sqrt(self)` modulo `z^order` by Newton's iteration
    /// `y <- y + y (1 - f y^2) / 2`, doubling the correct prefix each step.
    /// Requires a constant term of one.
    pub fn inv_sqrt(&self) -> Result<PowerSeries> {
        let n = self.order();
        if self.coefficient(0) != ExactRational::one() {
            return Err(Error::domain("inv_sqrt", "constant term must be 1"));
        }
        let max_doublings = usize::BITS - n.max(1).saturating_sub(1).leading_zeros() + 1;
        let half = ExactRational::new(BigInt::one(), BigInt::from(2));
        let mut y = PowerSeries::one(1);
        let mut prec = 1usize;
        let mut doublings = 0u32;
        while prec < n {
            if doublings >= max_doublings {
                break;
            }
            prec = (2 * prec).min(n);
            let f = self.truncate(prec);
            let y_p = y.truncate(prec);
            let residual = &PowerSeries::one(prec) - &(&f * &(&y_p * &y_p));
            y = &y_p + &(&y_p * &residual).scale(&half);
            doublings += 1;
        }
        let y = y.truncate(n);
        let check = &(self * &(&y * &y)) - &PowerSeries::one(n);
        if check.coefficients.iter().any(|c| !c.is_zero()) {
            return Err(Error::invariant(
                "inv_sqrt",
                format!("Newton iteration did not converge within {max_doublings} doublings"),
            ));
        }
        Ok(y)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let c = (0..order).map(|i| &self.coefficients[i] + &rhs.coefficients[i]).collect();
        PowerSeries { coefficients: c }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self + &(-rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![ExactRational::zero(); order];
        for (i, a) in self.coefficients.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(order - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coefficients: out }
    }
}

/// `(1 + z) / (1 - z)^2 = sum (2d + 1) z^d`, built by multiplying `1 + z` with the
/// square of the geometric series rather than from the closed coefficient.
pub fn rational_part(order: usize) -> PowerSeries {
    let geometric = PowerSeries::new(vec![ExactRational::one(); order], order);
    &PowerSeries::from_integers(&[1, 1], order) * &(&geometric * &geometric)
}

/// First `n + 1` coefficients of
/// `V_1(z) = (1/4) (1/sqrt(1 - 6z + z^2) - (1 + z)/(1 - z)^2)`.
pub fn ratio_gf_series(n: u32) -> Result<PowerSeries> {
    let order = n as usize + 1;
    let quadratic = PowerSeries::from_integers(&[1, -6, 1], order);
    let root = quadratic.inv_sqrt()?;
    let quarter = ExactRational::new(BigInt::one(), BigInt::from(4));
    let series = (&root - &rational_part(order)).scale(&quarter);
    if series.integer_coefficients().is_none() {
        return Err(Error::invariant("ratio_gf_series", "non-integer coefficient"));
    }
    Ok(series)
}

/// The coefficients of [`ratio_gf_series`] as integers.
pub fn ratio_gf_coefficients(n: u32) -> Result<Vec<BigInt>> {
    Ok(ratio_gf_series(n)?.integer_coefficients().expect("checked integral"))
}
