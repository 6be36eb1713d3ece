//! The exact scalar used by every pipeline, plus conversion helpers.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always stored in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(n: BigInt) -> ExactRational {
    ExactRational::from_integer(n)
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> ExactRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        from_big(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

/// `(-1)^e`.
pub fn sign_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn to_exact_string(q: &ExactRational) -> String {
    q.to_string()
}

pub fn parse_exact(s: &str) -> Option<ExactRational> {
    s.trim().parse().ok()
}

/// Returns the integer value if `q` has denominator one.
pub fn as_integer(q: &ExactRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Natural logarithm of a positive big integer, in double precision.
///
/// Works far outside the `f64` range by splitting off a power of two.
pub fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.sign() == Sign::Plus, "ln of non-positive integer");
    let bits = n.bits();
    let shift = bits.saturating_sub(60);
    let top = (n >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational, in double precision.
pub fn ln_rational(q: &ExactRational) -> f64 {
    ln_bigint(q.numer()) - ln_bigint(q.denom())
}

/// Nearest double; handles magnitudes whose numerator or denominator overflow `f64`.
pub fn to_f64(q: &ExactRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let mag = ln_rational(&q.abs()).exp();
    if q.is_negative() {
        -mag
    } else {
        mag
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_handles_negative_exponents() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), frac(1, 4));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    fn strings_round_trip() {
        for q in [frac(4, 3), int(4), frac(-7, 2), int(0)] {
            assert_eq!(parse_exact(&to_exact_string(&q)), Some(q));
        }
        assert_eq!(to_exact_string(&frac(8, 6)), "4/3");
        assert_eq!(to_exact_string(&frac(8, 2)), "4");
    }

    #[test]
    fn ln_of_huge_values() {
        let big = BigInt::one() << 5000u32;
        assert!((ln_bigint(&big) - 5000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        let q = ExactRational::new(BigInt::from(3), BigInt::one() << 4000u32);
        let expect = 3f64.ln() - 4000.0 * std::f64::consts::LN_2;
        assert!((ln_rational(&q) - expect).abs() < 1e-9);
    }

    #[test]
    fn zero_is_canonical() {
        let z = frac(0, -5);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }
}
