//! Exact unit-disk stability test by Schur–Cohn degree reduction.

use num_traits::{One, Signed};

use super::poly::MonicPolynomial;
use crate::exact::rational::ExactRational;

/// `true` iff every root of `p` lies in the open unit disk.
///
/// With `k = a_d`, the reduction `q(x) = (p(x) - k p*(x)) / x` (where `p*` reverses the
/// coefficients) has leading coefficient `1 - k^2`; `p` is stable iff `|k| < 1` and the
/// monic `q` is stable. Points where some step hits `|k| = 1` sit on the boundary and are
/// rejected.
pub fn schur_cohn_stable(p: &MonicPolynomial) -> bool {
    // descending: c[0] = 1, c[i] = a_i
    let mut c = p.descending();
    while c.len() > 1 {
        let d = c.len() - 1;
        let k = c[d].clone();
        if k.abs() >= ExactRational::one() {
            return false;
        }
        let lead = ExactRational::one() - &k * &k;
        c = (0..d).map(|i| (&c[i] - &k * &c[d - i]) / &lead).collect();
    }
    true
}
