//! Binomial coefficients, falling factorials and a factorial table.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!` for any integer `n`.
///
/// Vanishes for `0 <= n < k`. Negative upper index follows the product formula,
/// so `C(-2, 3) = -4`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::domain("binomial", format!("lower index k = {k} is negative")));
    }
    let k = if n >= 0 && k <= n { k.min(n - k) } else { k };
    let mut c = BigInt::one();
    for i in 0..k {
        // c = C(n, i) here, so c * (n - i) is divisible by i + 1.
        c *= n - i;
        c /= i + 1;
    }
    Ok(c)
}

/// `C(n, k)` for non-negative arguments.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    binomial(n as i64, k as i64).expect("k >= 0")
}

/// Falling factorial `(x)_j = x(x-1)...(x-j+1)`; `(x)_0 = 1`.
pub fn falling_factorial(x: i64, j: u64) -> BigInt {
    (0..j as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
}

/// Factorials `0!..=n!`, built once and shared by value.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigInt>,
}

impl FactorialTable {
    pub fn up_to(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        table.push(BigInt::one());
        for i in 1..=n {
            let next = &table[i - 1] * i;
            table.push(next);
        }
        FactorialTable { table }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `n!`; panics if `n` exceeds the table.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.table[n]
    }
}
