//! Exact rationals and integer combinatorics shared by every module.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q`; panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

const FACTORIAL_TABLE: usize = 256;

fn factorial_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(FACTORIAL_TABLE);
        t.push(BigInt::one());
        for k in 1..FACTORIAL_TABLE {
            let next = &t[k - 1] * BigInt::from(k);
            t.push(next);
        }
        t
    })
}

pub fn factorial(n: u64) -> BigInt {
    let table = factorial_table();
    if (n as usize) < table.len() {
        return table[n as usize].clone();
    }
    let mut acc = table[table.len() - 1].clone();
    for k in table.len() as u64..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient over all integers.
///
/// `binom(a, b) = 0` for `b < 0`, `binom(a, 0) = 1` for every `a`,
/// `binom(a, b) = 0` for `0 <= a < b`, the factorial formula for
/// `0 <= b <= a`, and the generalised `(-1)^b binom(b - a - 1, b)` for
/// negative `a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a >= 0 {
        if b > a {
            return BigInt::zero();
        }
        let (a, b) = (a as u64, b as u64);
        return factorial(a) / (factorial(b) * factorial(a - b));
    }
    let v = binom(b - a - 1, b);
    if b % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `1 / v`, or zero when `v` is zero. Table cells use this so that
/// out-of-range binomials vanish instead of dividing by zero.
pub fn recip_or_zero(v: &BigInt) -> Rational {
    if v.is_zero() {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), v.clone())
    }
}

/// Canonical text form: `p` when the denominator is one, `p/q` otherwise.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerator and denominator: scale both down before dividing.
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
    let v = n / d;
    if r.is_negative() {
        -v
    } else {
        v
    }
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(5, 7), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::one());
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-2, 2), BigInt::from(3));
        assert_eq!(binom(-3, -3), BigInt::zero());
    }

    #[test]
    fn factorial_past_table() {
        let f = factorial(300);
        assert_eq!(&f / factorial(299), BigInt::from(300));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(render(&ratio(6, 4)), "3/2");
        assert_eq!(render(&ratio(-4, 2)), "-2");
        assert_eq!(parse(" -3/6 ").unwrap(), ratio(-1, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big_num = Rational::new(factorial(400) * BigInt::from(3), factorial(400) * BigInt::from(4));
        assert_eq!(to_f64(&big_num), 0.75);
        let r = Rational::new(factorial(200) + BigInt::one(), factorial(200) * BigInt::from(2));
        assert!((to_f64(&r) - 0.5).abs() < 1e-15);
    }
}
