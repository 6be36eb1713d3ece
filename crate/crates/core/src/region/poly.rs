//! Dense univariate polynomials over exact rationals.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, ExactRational};

/// Polynomial with coefficients in ascending powers; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<ExactRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    pub fn scale(&self, c: &ExactRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&(ExactRational::one() / lc)),
            None => Poly::zero(),
        }
    }

    /// Remainder of Euclidean division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Poly) -> Poly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().expect("nonzero");
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let factor = &r[top] / lc;
            if !factor.is_zero() {
                let shift = top - dd;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] -= &factor * c;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sign of the polynomial as `x -> +inf` (`positive = true`) or `x -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        match (self.leading(), self.degree()) {
            (Some(lc), Some(deg)) => {
                let s = if lc.is_positive() { 1 } else { -1 };
                if positive || deg % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `x^d + a_1 x^{d-1} + ... + a_d`, stored as `(a_1, ..., a_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPolynomial {
    coefficients: Vec<ExactRational>,
}

impl MonicPolynomial {
    pub fn new(coefficients: Vec<ExactRational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::domain("MonicPolynomial", "degree must be at least 1"));
        }
        Ok(MonicPolynomial { coefficients })
    }

    pub fn from_integers(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// `(a_1, ..., a_d)`.
    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// Descending coefficients `(1, a_1, ..., a_d)`.
    pub fn descending(&self) -> Vec<ExactRational> {
        std::iter::once(ExactRational::one()).chain(self.coefficients.iter().cloned()).collect()
    }

    pub fn to_poly(&self) -> Poly {
        let mut c = self.descending();
        c.reverse();
        Poly::new(c)
    }

    /// `true` when every coefficient is strictly inside `|a_k| < bound_k`.
    pub fn within(&self, half_widths: &[ExactRational]) -> bool {
        self.coefficients.iter().zip(half_widths).all(|(a, h)| a.abs() < *h)
    }
}
