//! Oracles shared by the integration tests, built without the library's
//! factorial routines.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use recipbinom::Rational;

/// Pascal's triangle by repeated addition, rows `0..=max_n`.
pub fn pascal(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for m in 1..n {
            row[m] = &prev[m - 1] + &prev[m];
        }
        rows.push(row);
    }
    rows
}

/// `1 / binom(n, m)` from the additive triangle, zero outside it.
pub struct RecipOracle {
    rows: Vec<Vec<BigInt>>,
}

impl RecipOracle {
    pub fn new(max_n: usize) -> Self {
        RecipOracle { rows: pascal(max_n) }
    }

    pub fn binom(&self, n: i64, m: i64) -> BigInt {
        if n < 0 || m < 0 || m > n {
            return BigInt::zero();
        }
        self.rows[n as usize][m as usize].clone()
    }

    pub fn recip(&self, n: i64, m: i64) -> Rational {
        let b = self.binom(n, m);
        if b.is_zero() {
            Rational::zero()
        } else {
            Rational::new(BigInt::one(), b)
        }
    }
}

pub fn q(p: i64, r: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(r))
}
