//! The integer ratio `r_d = v_d^(1) / v_d^(0)` by its closed form, its binomial-sum
//! form and its second-order recurrence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::combinatorics::choose;
use super::legendre::legendre;
use super::rational::{as_integer, int};
use crate::error::{Error, Result};

/// `r_d = (P_d(3) - 2d - 1) / 4`. The division must be exact.
pub fn ratio_closed_form(d: u32) -> Result<BigInt> {
    let p = legendre(d, &int(3))?;
    let p = as_integer(&p)
        .ok_or_else(|| Error::invariant("ratio_closed_form", format!("P_{d}(3) = {p} is not an integer")))?;
    let shifted = p - BigInt::from(2 * d as u64 + 1);
    let (q, rem) = shifted.div_rem(&BigInt::from(4));
    if !rem.is_zero() {
        return Err(Error::invariant("ratio_closed_form", format!("P_{d}(3) - {} is not divisible by 4", 2 * d + 1)));
    }
    Ok(q)
}

/// `sum_{a=2}^{d} (-1)^{d+a} 2^{a-2} C(d+a, 2a) (C(2a, a) - 2^a)`.
pub fn ratio_sum_form(d: u32) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::domain("ratio_sum_form", "degree must be at least 2"));
    }
    let d = d as u64;
    let mut total = BigInt::zero();
    for a in 2..=d {
        let pow_a = BigInt::one() << a;
        let term = (BigInt::one() << (a - 2)) * choose(d + a, 2 * a) * (choose(2 * a, a) - pow_a);
        if (d + a).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `[r_0, ..., r_n]` from `d r_d - 3(2d-1) r_{d-1} + (d-1) r_{d-2} = 2d(d-1)`,
/// `r_0 = r_1 = 0`.
pub fn ratio_recurrence_seq(n: u32) -> Result<Vec<BigInt>> {
    let mut seq: Vec<BigInt> = Vec::with_capacity(n as usize + 1);
    for d in 0..=n as u64 {
        if d < 2 {
            seq.push(BigInt::zero());
            continue;
        }
        let i = d as usize;
        let rhs = BigInt::from(2 * d * (d - 1)) + BigInt::from(3 * (2 * d - 1)) * &seq[i - 1]
            - BigInt::from(d - 1) * &seq[i - 2];
        let (q, rem) = rhs.div_rem(&BigInt::from(d));
        if !rem.is_zero() {
            return Err(Error::invariant("ratio_recurrence_seq", format!("step d={d} leaves remainder {rem}")));
        }
        seq.push(q);
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn closed_form_examples() {
        let expected = [0, 0, 2, 14, 78, 418];
        for (d, &r) in expected.iter().enumerate() {
            assert_eq!(ratio_closed_form(d as u32).unwrap(), BigInt::from(r), "d={d}");
        }
    }

    #[test]
    fn sum_form_examples() {
        assert_eq!(ratio_sum_form(2).unwrap(), BigInt::from(2));
        assert_eq!(ratio_sum_form(3).unwrap(), BigInt::from(14));
        assert_eq!(ratio_sum_form(5).unwrap(), BigInt::from(418));
        assert!(ratio_sum_form(1).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(ratio_recurrence_seq(0).unwrap(), big(&[0]));
        assert_eq!(ratio_recurrence_seq(1).unwrap(), big(&[0, 0]));
        assert_eq!(ratio_recurrence_seq(3).unwrap(), big(&[0, 0, 2, 14]));
        assert_eq!(ratio_recurrence_seq(5).unwrap(), big(&[0, 0, 2, 14, 78, 418]));
    }

    #[test]
    fn three_routes_agree() {
        let seq = ratio_recurrence_seq(60).unwrap();
        for d in 2..=60u32 {
            let closed = ratio_closed_form(d).unwrap();
            assert_eq!(closed, seq[d as usize], "d={d}");
            assert_eq!(closed, ratio_sum_form(d).unwrap(), "d={d}");
        }
    }
}
