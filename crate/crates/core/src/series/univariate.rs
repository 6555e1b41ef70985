use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Truncated power series `c[0] + c[1] x + ... + c[N] x^N + O(x^(N+1))`.
#[derive(Clone, Debug)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c x^k`, or the zero series if `k > order`.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Polynomial with small integer coefficients, lowest degree first.
    pub fn poly(coeffs: &[i64], order: usize) -> Self {
        Self::from_fn(order, |k| {
            coeffs
                .get(k)
                .map(|&c| rational::int(c))
                .unwrap_or_else(Rational::zero)
        })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        Series1 {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series1 { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.
    ///
    /// # Panics
    /// If `k > self.order()`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::OrderExceeded {
            requested: k,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series1 {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |k| f(&self.coeffs[k], &other.coeffs[k]))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn nonzeros(&self) -> Vec<(usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        let rhs = other.nonzeros();
        for (i, a) in self.nonzeros() {
            if i > order {
                break;
            }
            for &(j, b) in &rhs {
                if i + j > order {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Series1 { coeffs: out }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = a0.recip();
        let tail: Vec<(usize, &Rational)> =
            self.nonzeros().into_iter().filter(|&(k, _)| k > 0).collect();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv.clone());
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for &(k, a) in &tail {
                if k > n {
                    break;
                }
                acc += a * &out[n - k];
            }
            out.push(-(acc * &inv));
        }
        Ok(Series1 { coeffs: out })
    }

    /// `self / other`, both truncated to the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// `sum_k outer[k] inner^k`. Coefficients of `outer` past its length are
    /// taken as zero, so `outer` should carry at least `order + 1` terms.
    pub fn compose(outer: &[Rational], inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = inner.order();
        let Some(valuation) = (1..=order).find(|&k| !inner.coeffs[k].is_zero()) else {
            let c0 = outer.first().cloned().unwrap_or_else(Rational::zero);
            return Ok(Self::constant(c0, order));
        };
        let terms = outer.len().min(order / valuation + 1);
        if terms == 0 {
            return Ok(Self::zero(order));
        }
        let mut acc = Self::constant(outer[terms - 1].clone(), order);
        for k in (0..terms - 1).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += &outer[k];
        }
        Ok(acc)
    }

    /// Divides by `x^shift`; the result has order `self.order() - shift`.
    pub fn div_x_pow(&self, shift: usize) -> Result<Self> {
        if shift > self.order() {
            return Err(Error::OrderExceeded {
                requested: shift,
                order: self.order(),
            });
        }
        if let Some(power) = (0..shift).find(|&k| !self.coeffs[k].is_zero()) {
            return Err(Error::NotDivisible { power, shift });
        }
        Ok(Series1 {
            coeffs: self.coeffs[shift..].to_vec(),
        })
    }

    /// Multiplies by `x^shift`, keeping the order.
    pub fn mul_x_pow(&self, shift: usize) -> Self {
        let order = self.order();
        Self::from_fn(order, |k| {
            if k >= shift {
                self.coeffs[k - shift].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Replaces `x` by `c x`.
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &p);
            p *= c;
        }
        Series1 { coeffs }
    }

    /// Truncated sum at a floating-point argument.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational::to_f64(c))
    }
}

/// Coefficientwise equality up to the smaller of the two orders.
impl PartialEq for Series1 {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}
