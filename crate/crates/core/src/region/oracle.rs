//! Exact areas of the degree-2 region by elementary integration.
//!
//! The region is the triangle `|a_2| < 1`, `|a_1| < 1 + a_2`; the discriminant parabola
//! `a_2 = a_1^2 / 4` separates real roots (below) from a complex pair (above).

use num_traits::Zero;

use crate::exact::rational::{frac, int, ExactRational};

/// `int_lo^hi sum c_i t^i dt` for a polynomial given in ascending coefficients.
fn integrate(coeffs: &[ExactRational], lo: &ExactRational, hi: &ExactRational) -> ExactRational {
    coeffs.iter().enumerate().fold(ExactRational::zero(), |acc, (i, c)| {
        let e = i as i32 + 1;
        acc + c * (hi.pow(e) - lo.pow(e)) / int(e as i64)
    })
}

/// `(v_2, v_2^(0), v_2^(1))`, each area integrated on its own.
pub fn exact_oracle_d2() -> (ExactRational, ExactRational, ExactRational) {
    // Total: slices a_2 = t in (-1, 1) have width 2(1 + t).
    let total = integrate(&[int(2), int(2)], &int(-1), &int(1));
    // Complex pair: a_1 in (-2, 2), a_2 from a_1^2/4 up to 1.
    let complex = integrate(&[int(1), int(0), frac(-1, 4)], &int(-2), &int(2));
    // Real roots: for a_1 in (0, 2), a_2 from a_1 - 1 up to a_1^2/4; doubled by symmetry.
    let real = int(2) * integrate(&[int(1), int(-1), frac(1, 4)], &int(0), &int(2));
    (total, real, complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn areas() {
        let (t, r, c) = exact_oracle_d2();
        assert_eq!(t, int(4));
        assert_eq!(r, frac(4, 3));
        assert_eq!(c, frac(8, 3));
        assert_eq!(&r + &c, t);
        assert_eq!(c / r, int(2));
    }
}
