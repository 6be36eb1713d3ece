//! Sturm sequences and distinct real-root counting over exact rationals.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use crate::exact::rational::ExactRational;

/// `p, p', -rem(p, p'), ...` until the remainder vanishes.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let dp = p.derivative();
    if dp.is_zero() {
        return seq;
    }
    seq.push(dp);
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-ExactRational::from_integer(1.into())));
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(q: &ExactRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign variations of the sequence at `x`.
pub fn variations_at(seq: &[Poly], x: &ExactRational) -> usize {
    sign_changes(seq.iter().map(|p| sign_of(&p.eval(x))))
}

/// Sign variations at `+inf` (`positive = true`) or `-inf`.
pub fn variations_at_infinity(seq: &[Poly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| p.sign_at_infinity(positive)))
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &Poly) -> usize {
    let seq = sturm_sequence(p);
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots_in(p: &Poly, lo: &ExactRational, hi: &ExactRational) -> usize {
    let seq = sturm_sequence(p);
    variations_at(&seq, lo).saturating_sub(variations_at(&seq, hi))
}
