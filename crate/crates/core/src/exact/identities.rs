//! Exact checks of the binomial-sum identities that drive the ratio evaluation.
//!
//! Each check evaluates the left-hand sum directly, compares it with the claimed closed
//! form and returns the left-hand value. A mismatch is an [`Error::Invariant`] naming the
//! parameters.

use num_bigint::BigInt;
use num_traits::Zero;

use super::combinatorics::{choose, FactorialTable};
use super::rational::{from_big, int, ExactRational};
use crate::error::{Error, Result};

fn signed(parity: u64, q: ExactRational) -> ExactRational {
    if parity.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

fn compare(op: &'static str, params: String, lhs: ExactRational, rhs: ExactRational) -> Result<ExactRational> {
    if lhs == rhs {
        Ok(lhs)
    } else {
        Err(Error::invariant(op, format!("{params}: lhs {lhs} != rhs {rhs}")))
    }
}

fn check_a_r(op: &'static str, a: u64, r: u64) -> Result<()> {
    if a < 1 || r < 1 || r > a {
        return Err(Error::domain(op, format!("need 1 <= r <= a, got a={a}, r={r}")));
    }
    Ok(())
}

/// `sum_{b=0}^{a-r} (-1)^b C(a+b, 2b+r) C(2b+r, b) / (a+b) = [r = a] / a`.
pub fn inner_sum_one(a: u64, r: u64) -> Result<ExactRational> {
    check_a_r("inner_sum_one", a, r)?;
    let lhs = (0..=a - r)
        .map(|b| {
            let c = choose(a + b, 2 * b + r) * choose(2 * b + r, b);
            signed(b, ExactRational::new(c, BigInt::from(a + b)))
        })
        .fold(ExactRational::zero(), |acc, t| acc + t);
    let rhs = if r == a { ExactRational::new(1.into(), a.into()) } else { ExactRational::zero() };
    compare("inner_sum_one", format!("a={a}, r={r}"), lhs, rhs)
}

/// `sum_{b=0}^{a-r} (-1)^b C(a+b, 2b+r) C(2b, b) / (a+b) = C(a-1, a-r) / (2a-r)`.
pub fn inner_sum_two(a: u64, r: u64) -> Result<ExactRational> {
    check_a_r("inner_sum_two", a, r)?;
    let lhs = (0..=a - r)
        .map(|b| {
            let c = choose(a + b, 2 * b + r) * choose(2 * b, b);
            signed(b, ExactRational::new(c, BigInt::from(a + b)))
        })
        .fold(ExactRational::zero(), |acc, t| acc + t);
    let rhs = ExactRational::new(choose(a - 1, a - r), BigInt::from(2 * a - r));
    compare("inner_sum_two", format!("a={a}, r={r}"), lhs, rhs)
}

/// `S_m = sum_{k=0}^{n} (-1)^k C(n+k, 2k) C(2k, k) / (k+m+1)
///      = (-1)^n m! n! C(m, n) / (m+n+1)!`.
pub fn sm_sum(m: u64, n: u64) -> Result<ExactRational> {
    let lhs = (0..=n)
        .map(|k| {
            let c = choose(n + k, 2 * k) * choose(2 * k, k);
            signed(k, ExactRational::new(c, BigInt::from(k + m + 1)))
        })
        .fold(ExactRational::zero(), |acc, t| acc + t);
    let fact = FactorialTable::up_to((m + n + 1) as usize);
    let num = fact.get(m as usize) * fact.get(n as usize) * choose(m, n);
    let rhs = signed(n, ExactRational::new(num, fact.get((m + n + 1) as usize).clone()));
    compare("sm_sum", format!("m={m}, n={n}"), lhs, rhs)
}

/// `sum_{k=0}^{m} (-2)^k (2m+1)/(2m-k+1) C(m, k) = (-1)^m 4^m / C(2m, m)`.
pub fn pfaff_sum(m: u64) -> Result<ExactRational> {
    let lhs = (0..=m)
        .map(|k| {
            let c = BigInt::from(-2).pow(k as u32) * (2 * m + 1) * choose(m, k);
            ExactRational::new(c, BigInt::from(2 * m - k + 1))
        })
        .fold(ExactRational::zero(), |acc, t| acc + t);
    let rhs = signed(m, ExactRational::new(BigInt::from(1) << (2 * m), choose(2 * m, m)));
    compare("pfaff_sum", format!("m={m}"), lhs, rhs)
}

/// `C(l+q+1, m+n+1) = sum_{0<=k<=l} C(l-k, m) C(q+k, n)` for `l, m >= 0`, `n >= q >= 0`.
pub fn binomial_convolution(l: u64, q: u64, m: u64, n: u64) -> Result<ExactRational> {
    if n < q {
        return Err(Error::domain("binomial_convolution", format!("need n >= q, got q={q}, n={n}")));
    }
    let lhs = from_big(choose(l + q + 1, m + n + 1));
    let rhs = from_big((0..=l).map(|k| choose(l - k, m) * choose(q + k, n)).sum());
    compare("binomial_convolution", format!("l={l}, q={q}, m={m}, n={n}"), lhs, rhs)
}

/// `(-1)^d rho_d(-4) = 2d + 1`.
pub fn rho_identity(d: u32) -> Result<ExactRational> {
    let v = super::legendre::associated_legendre_rho(d, &int(-4))?;
    compare("rho_identity", format!("d={d}"), signed(d as u64, v), int(2 * d as i64 + 1))
}

/// Parameter ranges for [`run_identity_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityRanges {
    /// Upper bound for `a` in the two inner sums (all `1 <= r <= a`).
    pub max_a: u64,
    /// Upper bound for both `m` and `n` in `S_m`.
    pub max_mn: u64,
    pub max_pfaff_m: u64,
    /// Upper bound for each of `l, q, m, n` in the binomial convolution identity.
    pub max_convolution: u64,
    pub max_rho_d: u32,
}

impl Default for IdentityRanges {
    fn default() -> Self {
        IdentityRanges { max_a: 60, max_mn: 40, max_pfaff_m: 60, max_convolution: 20, max_rho_d: 200 }
    }
}

/// Outcome of one identity family over its full range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn tally<I>(name: &'static str, checks: I) -> IdentityOutcome
where
    I: IntoIterator<Item = Result<ExactRational>>,
{
    let mut cases = 0;
    let mut failures = Vec::new();
    for c in checks {
        cases += 1;
        if let Err(e) = c {
            failures.push(e.to_string());
        }
    }
    IdentityOutcome { name, cases, failures }
}

/// Runs every identity family exhaustively over `ranges`.
pub fn run_identity_suite(ranges: &IdentityRanges) -> Vec<IdentityOutcome> {
    let pairs = |max_a: u64| (1..=max_a).flat_map(|a| (1..=a).map(move |r| (a, r)));
    let quads = {
        let n = ranges.max_convolution;
        let mut v = Vec::new();
        for l in 0..=n {
            for q in 0..=n {
                for m in 0..=n {
                    for nn in q..=n {
                        v.push((l, q, m, nn));
                    }
                }
            }
        }
        v
    };
    vec![
        tally("inner_sum_one", pairs(ranges.max_a).map(|(a, r)| inner_sum_one(a, r))),
        tally("inner_sum_two", pairs(ranges.max_a).map(|(a, r)| inner_sum_two(a, r))),
        tally("sm_sum", (0..=ranges.max_mn).flat_map(|m| (0..=ranges.max_mn).map(move |n| sm_sum(m, n)))),
        tally("pfaff_sum", (0..=ranges.max_pfaff_m).map(pfaff_sum)),
        tally("binomial_convolution", quads.into_iter().map(|(l, q, m, n)| binomial_convolution(l, q, m, n))),
        tally("rho_identity", (0..=ranges.max_rho_d).map(rho_identity)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn examples() {
        for a in 1..10 {
            assert_eq!(inner_sum_one(a, a).unwrap(), frac(1, a as i64));
        }
        assert_eq!(inner_sum_one(5, 2).unwrap(), int(0));
        assert_eq!(inner_sum_two(2, 1).unwrap(), frac(1, 3));
        assert_eq!(pfaff_sum(1).unwrap(), int(-2));
        assert_eq!(pfaff_sum(0).unwrap(), int(1));
    }

    #[test]
    fn sm_sum_vanishes_when_n_exceeds_m() {
        assert_eq!(sm_sum(2, 5).unwrap(), int(0));
        assert_eq!(sm_sum(0, 0).unwrap(), int(1));
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(inner_sum_one(3, 4), Err(Error::Domain { .. })));
        assert!(matches!(inner_sum_two(0, 0), Err(Error::Domain { .. })));
        assert!(matches!(binomial_convolution(2, 3, 1, 2), Err(Error::Domain { .. })));
    }

    #[test]
    fn small_suite_passes() {
        let ranges = IdentityRanges { max_a: 12, max_mn: 10, max_pfaff_m: 12, max_convolution: 6, max_rho_d: 30 };
        for outcome in run_identity_suite(&ranges) {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.failures);
            assert!(outcome.cases > 0);
        }
    }
}
