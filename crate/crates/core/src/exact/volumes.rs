//! Closed forms for the region volumes `v_d`, `v_d^(0)` and `v_d^(1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::combinatorics::{choose, falling_factorial, FactorialTable};
use super::rational::{frac, from_big, int, pow2, sign_pow, ExactRational};
use crate::error::{Error, Result};

/// Total volume `v_d` of the contractive region, from the even/odd product formula.
pub fn fam_volume(d: u32) -> Result<ExactRational> {
    if d < 1 {
        return Err(Error::domain("fam_volume", "degree must be at least 1"));
    }
    let m = (d / 2) as usize;
    let fact = FactorialTable::up_to(2 * m + 1);
    let mut v;
    if d.is_multiple_of(2) {
        v = pow2(2 * (m * m) as i64);
        for j in 1..=m {
            let num = fact.get(j - 1).pow(4);
            let den = fact.get(2 * j - 1).pow(2);
            v *= ExactRational::new(num, den);
        }
    } else {
        v = pow2((2 * m * m + 2 * m + 1) as i64);
        for j in 1..=m {
            let num = fact.get(j).pow(2) * fact.get(j - 1).pow(2);
            let den = fact.get(2 * j - 1) * fact.get(2 * j + 1);
            v *= ExactRational::new(num, den);
        }
    }
    Ok(v)
}

/// The Selberg instance `S_d(1, 1, 1/2) = 1 / prod_{i<d} C(2i+1, i)`.
pub fn selberg_special(d: u32) -> ExactRational {
    let den = (0..d as u64).fold(BigInt::one(), |acc, i| acc * choose(2 * i + 1, i));
    ExactRational::new(BigInt::one(), den)
}

/// Aomoto's extension `B_d(j, k)` of the Selberg integral.
///
/// All half-integer factors are cleared to integers first:
/// `2 + (d-i-1)/2 = (d-i+3)/2`, `3 + (2d-i-1)/2 = (2d-i+5)/2`,
/// `1 + (d-i)/2 = (d-i+2)/2`, `2 + (2d-i-1)/2 = (2d-i+3)/2`.
/// A vanishing denominator factor is reported rather than continued analytically.
pub fn aomoto_b(d: u32, j: u32, k: u32) -> Result<ExactRational> {
    let d = d as i64;
    let (j, k) = (j as i64, k as i64);

    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        let lower = 2 * d - i + 5;
        if lower == 0 {
            return Err(Error::domain(
                "aomoto_b",
                format!("factor 3 + (2d-i-1)/2 vanishes at d={d}, j={j}, k={k}, i={i}"),
            ));
        }
        num *= d - i + 3;
        den *= lower;
    }
    for i in 1..=j {
        num *= d - i + 2;
    }
    for i in 1..=k {
        num *= d - i + 2;
    }
    for i in 1..=(j + k) {
        let lower = 2 * d - i + 3;
        if lower == 0 {
            return Err(Error::domain(
                "aomoto_b",
                format!("factor 2 + (2d-i-1)/2 vanishes at d={d}, j={j}, k={k}, i={i}"),
            ));
        }
        den *= lower;
    }
    // The halves cancel: j + k in the numerator, j + k in the denominator, and the
    // first product is a ratio of halves.
    Ok(ExactRational::new(num, den) * selberg_special(d as u32))
}

/// Volume of the totally real part, `v_d^(0) = 2^{d(d+1)/2} / d! * S_d(1,1,1/2)`.
pub fn v0_exact(d: u32) -> ExactRational {
    let fact = FactorialTable::up_to(d as usize);
    let e = (d as i64) * (d as i64 + 1) / 2;
    pow2(e) / from_big(fact.get(d as usize).clone()) * selberg_special(d)
}

/// `int_{z=0}^{1} int_{y=-2 sqrt z}^{2 sqrt z} y^j (y+z+1)^k dy dz`, by the closed form
/// obtained from repeated integration by parts.
pub fn inner_double_integral(j: u32, k: u32) -> ExactRational {
    let (j, k) = (j as i64, k as i64);
    let mut first = ExactRational::zero();
    let mut second = ExactRational::zero();
    for r in 1..=(j + 1) {
        let scale = from_big(BigInt::from(-2).pow((r - 1) as u32) * falling_factorial(j, (r - 1) as u64));
        first += &scale / from_big(falling_factorial(k + r + 1, r as u64));
        second += &scale / from_big(falling_factorial(2 * k + r + 2, r as u64));
    }
    pow2(j + 2 * k + 4) / int(k + 1) * (first - second)
}

/// The same double integral by a second route: expand `y^j (y + (z+1))^k` and integrate monomials over the
/// parabolic section, `int y^m dy = 2 (2 sqrt z)^{m+1}/(m+1)` for even `m`.
pub fn inner_double_integral_expanded(j: u32, k: u32) -> ExactRational {
    let mut total = ExactRational::zero();
    for i in 0..=k {
        let m = j + i;
        if m % 2 == 1 {
            continue;
        }
        // int_{-2 sqrt z}^{2 sqrt z} y^m dy = 2^{m+2} z^{(m+1)/2} / (m+1)
        let y_part = pow2(m as i64 + 2) / int(m as i64 + 1);
        for c in 0..=(k - i) {
            let coeff = from_big(choose(k as u64, i as u64) * choose((k - i) as u64, c as u64));
            // int_0^1 z^{(m+1)/2 + c} dz = 2 / (m + 3 + 2c)
            let z_part = frac(2, (m + 3 + 2 * c) as i64);
            total += coeff * &y_part * z_part;
        }
    }
    total
}

/// One-pair volume `v_d^(1)` assembled from the double sum over `(j, k)` with the Aomoto
/// factor `B_{d-2}(d-2-k, d-2-k-j)` and the inner double integral.
pub fn v1_exact_via_integral(d: u32) -> Result<ExactRational> {
    if d < 2 {
        return Err(Error::domain("v1_exact_via_integral", "degree must be at least 2"));
    }
    let n = d - 2;
    let fact = FactorialTable::up_to(n as usize);
    let d_i = d as i64;
    let mut sum = ExactRational::zero();
    for j in 0..=n {
        for k in 0..=(n - j) {
            let (ji, ki) = (j as i64, k as i64);
            // (-1)^{d-k} and (-1)^{d+k} agree.
            let sign = sign_pow(d_i + ki);
            let den = fact.get(j as usize) * fact.get(k as usize) * fact.get((n - j - k) as usize);
            let weight = pow2(2 * d_i - 2 - 2 * ki - ji) / from_big(den) * int(sign as i64);
            let b = aomoto_b(n, n - k, n - k - j)?;
            sum += weight * b * inner_double_integral(j, k);
        }
    }
    let e = (d_i - 1) * (d_i - 2) / 2 - 2;
    Ok(pow2(e) * sum)
}

/// Convenience: `v_d^(1)` for `d < 2` is zero (no room for a complex pair).
pub fn v1_or_zero(d: u32) -> Result<ExactRational> {
    if d < 2 {
        Ok(ExactRational::zero())
    } else {
        v1_exact_via_integral(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fam_volume_examples() {
        assert_eq!(fam_volume(1).unwrap(), int(2));
        assert_eq!(fam_volume(2).unwrap(), int(4));
        assert_eq!(fam_volume(3).unwrap(), frac(16, 3));
        assert_eq!(fam_volume(4).unwrap(), frac(64, 9));
        assert!(matches!(fam_volume(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn selberg_examples() {
        assert_eq!(selberg_special(0), int(1));
        assert_eq!(selberg_special(2), frac(1, 3));
        assert_eq!(selberg_special(4), frac(1, 1050));
    }

    #[test]
    fn aomoto_examples() {
        for d in 0..8 {
            assert_eq!(aomoto_b(d, 0, 0).unwrap(), selberg_special(d));
        }
        assert_eq!(aomoto_b(0, 0, 0).unwrap(), int(1));
        assert_eq!(aomoto_b(2, 1, 0).unwrap(), frac(1, 6));
    }

    /// Evaluates every factor as a half-integer rational, exactly as the product is written.
    fn aomoto_oracle(d: i64, j: i64, k: i64) -> ExactRational {
        let h = |n: i64| frac(n, 2);
        let mut v = selberg_special(d as u32);
        for i in 1..=k {
            v *= (int(2) + h(d - i - 1)) / (int(3) + h(2 * d - i - 1));
        }
        for i in 1..=j {
            v *= int(1) + h(d - i);
        }
        for i in 1..=k {
            v *= int(1) + h(d - i);
        }
        for i in 1..=(j + k) {
            v /= int(2) + h(2 * d - i - 1);
        }
        v
    }

    #[test]
    fn aomoto_matches_half_integer_oracle() {
        for d in 0..8u32 {
            for j in 0..=d {
                for k in 0..=d {
                    assert_eq!(aomoto_b(d, j, k).unwrap(), aomoto_oracle(d as i64, j as i64, k as i64));
                }
            }
        }
    }

    #[test]
    fn aomoto_rejects_vanishing_denominators() {
        // 2d - i + 3 = 0 at i = 3 for d = 0, reached once j + k >= 3.
        let err = aomoto_b(0, 3, 0).unwrap_err();
        assert!(matches!(err, Error::Domain { op: "aomoto_b", .. }), "{err}");
        // 2d - i + 5 = 0 at i = 5 for d = 0.
        assert!(aomoto_b(0, 0, 5).is_err());
    }

    #[test]
    fn v0_examples() {
        assert_eq!(v0_exact(0), int(1));
        assert_eq!(v0_exact(2), frac(4, 3));
        assert_eq!(v0_exact(3), frac(16, 45));
        assert_eq!(v0_exact(4), frac(64, 1575));
    }

    #[test]
    fn inner_integral_examples() {
        assert_eq!(inner_double_integral(0, 0), frac(8, 3));
        assert_eq!(inner_double_integral(1, 0), int(0));
        // int_0^1 (z + 1) 4 sqrt(z) dz = 4 (2/5 + 2/3)
        assert_eq!(inner_double_integral(0, 1), frac(64, 15));
    }

    #[test]
    fn inner_integral_matches_monomial_oracle() {
        for j in 0..=6 {
            for k in 0..=6 {
                assert_eq!(inner_double_integral(j, k), inner_double_integral_expanded(j, k), "j={j} k={k}");
            }
        }
    }

    #[test]
    fn v1_examples() {
        assert_eq!(v1_exact_via_integral(2).unwrap(), frac(8, 3));
        assert_eq!(v1_exact_via_integral(3).unwrap(), frac(224, 45));
        assert_eq!(v1_exact_via_integral(4).unwrap(), int(78) * frac(64, 1575));
        assert!(v1_exact_via_integral(1).is_err());
    }

    #[test]
    fn low_degree_exhaustion() {
        for d in [2, 3] {
            assert_eq!(v0_exact(d) + v1_exact_via_integral(d).unwrap(), fam_volume(d).unwrap());
        }
    }
}
