//! Division-free classification of integer polynomials.
//!
//! Sampled polynomials share the denominator `2^53`, so scaling by it gives an integer
//! polynomial with the same roots. Schur–Cohn reduction and Sturm sequences then run on
//! primitive integer polynomials (fraction-free steps, content removed after each step),
//! which avoids rational normalisation entirely. Results coincide with [`classify`].
//!
//! [`classify`]: super::classify::classify

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::classify::RootClassification;
use super::poly::MonicPolynomial;

fn trim(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

/// Divides out the positive content.
fn primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut c {
            *x /= &g;
        }
    }
    c
}

/// `true` iff every root lies in the open unit disk; `c` is descending with `c[0] > 0`.
pub fn schur_cohn_stable_integer(c: &[BigInt]) -> bool {
    let mut c = c.to_vec();
    while c.len() > 1 {
        let d = c.len() - 1;
        if c[d].abs() >= c[0] {
            return false;
        }
        // c[0] * (p - k p*) / x with k = c[d] / c[0]; the new leading term c0^2 - cd^2 is positive.
        c = primitive((0..d).map(|i| &c[0] * &c[i] - &c[d] * &c[d - i]).collect());
    }
    true
}

/// Sign-corrected pseudo-remainder: a positive multiple of `-(a mod b)`, ascending.
fn neg_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0u32;
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let t = r[top].clone();
        let shift = top - db;
        for x in r.iter_mut() {
            *x *= lc;
        }
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &t * y;
        }
        r.pop();
        steps += 1;
        r = trim(r);
    }
    let flip = lc.is_positive() || steps.is_multiple_of(2);
    let r = if flip { r.into_iter().map(|x| -x).collect() } else { r };
    primitive(r)
}

fn sign(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
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

fn eval_at_unit(c: &[BigInt], negative: bool) -> BigInt {
    c.iter().enumerate().map(|(i, x)| if negative && i % 2 == 1 { -x } else { x.clone() }).sum()
}

fn sign_at_infinity(c: &[BigInt], negative: bool) -> i32 {
    let s = sign(c.last().expect("nonzero"));
    if negative && (c.len() - 1) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Classifies `c[0] x^d + ... + c[d]` with integer coefficients, `c[0] > 0`, `d >= 1`.
pub fn classify_integer(c: &[BigInt]) -> RootClassification {
    assert!(c.len() >= 2 && c[0].is_positive(), "need a positive leading coefficient and degree >= 1");
    if !schur_cohn_stable_integer(c) {
        return RootClassification::Unstable;
    }
    let p: Vec<BigInt> = c.iter().rev().cloned().collect();
    let dp: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, x)| x * i).collect();
    let mut seq = vec![p, primitive(dp)];
    loop {
        let n = seq.len();
        let r = neg_prem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    // The last element is gcd(p, p') up to a constant.
    if seq.last().is_some_and(|g| g.len() > 1) {
        return RootClassification::Degenerate(format!("repeated factor of degree {}", seq.last().unwrap().len() - 1));
    }
    let on_line = variations(seq.iter().map(|q| sign_at_infinity(q, true)))
        - variations(seq.iter().map(|q| sign_at_infinity(q, false)));
    let in_disk = variations(seq.iter().map(|q| sign(&eval_at_unit(q, true))))
        - variations(seq.iter().map(|q| sign(&eval_at_unit(q, false))));
    assert_eq!(on_line, in_disk, "stable polynomial with real roots outside (-1, 1): {c:?}");
    let d = c.len() - 1;
    RootClassification::Classified { s: (d - on_line) / 2, real_roots: on_line }
}

/// Descending integer coefficients of a positive multiple of `p`.
pub fn clear_denominators(p: &MonicPolynomial) -> Vec<BigInt> {
    let l = p.coefficients().iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    p.descending().iter().map(|a| (a * &l).to_integer()).collect()
}
