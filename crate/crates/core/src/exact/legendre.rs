//! Legendre polynomials `P_d` and Riordan's associated polynomials `rho_d`, each by more
//! than one exact route.

use num_traits::{One, Zero};

use super::combinatorics::choose;
use super::rational::{from_big, int, pow2, ExactRational};
use crate::error::{Error, Result};

/// The three independent ways of evaluating `P_d(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendrePath {
    /// `2^{-d} sum_k (-1)^k C(d-k,k) C(2d-2k,d-k) x^{d-2k}`
    Alternating,
    /// `sum_k C(d+k,2k) C(2k,k) ((x-1)/2)^k`
    Shifted,
    /// `d P_d = (2d-1) x P_{d-1} - (d-1) P_{d-2}`, `P_0 = 1`, `P_1 = x`
    Recurrence,
}

pub fn legendre_via(path: LegendrePath, d: u32, x: &ExactRational) -> ExactRational {
    match path {
        LegendrePath::Alternating => legendre_alternating(d, x),
        LegendrePath::Shifted => legendre_shifted(d, x),
        LegendrePath::Recurrence => legendre_table(d, x).pop().expect("non-empty"),
    }
}

fn legendre_alternating(d: u32, x: &ExactRational) -> ExactRational {
    let d = d as u64;
    let mut sum = ExactRational::zero();
    for k in 0..=d / 2 {
        let c = from_big(choose(d - k, k) * choose(2 * d - 2 * k, d - k));
        let term = c * x.pow((d - 2 * k) as i32);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum * pow2(-(d as i64))
}

fn legendre_shifted(d: u32, x: &ExactRational) -> ExactRational {
    let d = d as u64;
    let t = (x - int(1)) / int(2);
    let mut sum = ExactRational::zero();
    let mut t_pow = ExactRational::one();
    for k in 0..=d {
        sum += from_big(choose(d + k, 2 * k) * choose(2 * k, k)) * &t_pow;
        t_pow *= &t;
    }
    sum
}

/// `[P_0(x), ..., P_n(x)]` by the three-term recurrence.
pub fn legendre_table(n: u32, x: &ExactRational) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(ExactRational::one());
    if n >= 1 {
        out.push(x.clone());
    }
    for d in 2..=n as i64 {
        let next = (int(2 * d - 1) * x * &out[d as usize - 1] - int(d - 1) * &out[d as usize - 2]) / int(d);
        out.push(next);
    }
    out
}

/// `P_d(x)`, evaluated along all three routes; disagreement is an invariant violation.
pub fn legendre(d: u32, x: &ExactRational) -> Result<ExactRational> {
    let a = legendre_via(LegendrePath::Alternating, d, x);
    for path in [LegendrePath::Shifted, LegendrePath::Recurrence] {
        let b = legendre_via(path, d, x);
        if a != b {
            return Err(Error::invariant(
                "legendre",
                format!("P_{d}({x}): alternating form gives {a}, {path:?} gives {b}"),
            ));
        }
    }
    Ok(a)
}

/// `rho_d(x) = sum_{k=0}^{d} C(d+k, d-k) x^k`.
pub fn rho_sum(d: u32, x: &ExactRational) -> ExactRational {
    let d = d as u64;
    let mut sum = ExactRational::zero();
    let mut x_pow = ExactRational::one();
    for k in 0..=d {
        sum += from_big(choose(d + k, d - k)) * &x_pow;
        x_pow *= x;
    }
    sum
}

/// `rho_d(x)` by `rho_d = (x+2) rho_{d-1} - rho_{d-2}` seeded with `rho_0 = 1`, `rho_1 = x+1`.
///
/// The seed `rho_0 = 1` is the value of the defining sum; `rho_0 = 0` would break both
/// the sum and `(-1)^d rho_d(-4) = 2d + 1`.
pub fn rho_recurrence(d: u32, x: &ExactRational) -> ExactRational {
    let mut prev = ExactRational::one();
    if d == 0 {
        return prev;
    }
    let mut cur = x + int(1);
    let step = x + int(2);
    for _ in 2..=d {
        let next = &step * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Associated Legendre polynomial `rho_d(x)`; the recurrence must reproduce the sum.
pub fn associated_legendre_rho(d: u32, x: &ExactRational) -> Result<ExactRational> {
    let by_sum = rho_sum(d, x);
    let by_rec = rho_recurrence(d, x);
    if by_sum != by_rec {
        return Err(Error::invariant(
            "associated_legendre_rho",
            format!("rho_{d}({x}): sum gives {by_sum}, recurrence gives {by_rec}"),
        ));
    }
    Ok(by_sum)
}
