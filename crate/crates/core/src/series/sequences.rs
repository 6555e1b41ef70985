//! Coefficient sequences of the standard outer functions used with
//! [`Series1::compose`](super::Series1::compose) and
//! [`Series2::compose_outer`](super::Series2::compose_outer).

use crate::rational::{int, ratio, Rational};
use num_traits::Zero;

/// `log(1 + u) = sum_{k>0} (-1)^(k-1) u^k / k`, first `len` coefficients.
pub fn log1p(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| match k {
            0 => Rational::zero(),
            k if k % 2 == 1 => ratio(1, k as i64),
            k => ratio(-1, k as i64),
        })
        .collect()
}

/// `Li2(u) = sum_{k>0} u^k / k^2`.
pub fn dilog(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                ratio(1, (k * k) as i64)
            }
        })
        .collect()
}

/// `1 / (1 - u)`.
pub fn geometric(len: usize) -> Vec<Rational> {
    vec![int(1); len]
}

/// `log(1 + u) / u = sum_k (-1)^k u^k / (k + 1)`.
pub fn log1p_over_u(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            ratio(sign, k as i64 + 1)
        })
        .collect()
}

/// The identity function `u`.
pub fn identity(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| if k == 1 { int(1) } else { Rational::zero() })
        .collect()
}
