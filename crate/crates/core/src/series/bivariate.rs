use num_traits::{One, Zero};

use super::{Axis, Parity, Series1};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Truncated bivariate power series `sum c[n][m] x^n y^m`, `0 <= n, m <= N`.
///
/// Storage is a dense row-major `(N+1) x (N+1)` grid. Coefficients above the
/// main diagonal are stored like any other: the `J` and `K` triangles have
/// nonzero entries at `m = n + 1`.
#[derive(Clone, Debug)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Series2 {
            order,
            coeffs: vec![Rational::zero(); (order + 1) * (order + 1)],
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

    /// `c x^n y^m` (zero when the monomial lies past the order).
    pub fn monomial(n: usize, m: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order && m <= order {
            s.set(n, m, c);
        }
        s
    }

    /// Polynomial from `(n, m, coefficient)` terms.
    pub fn poly(terms: &[(usize, usize, i64)], order: usize) -> Self {
        let mut s = Self::zero(order);
        for &(n, m, c) in terms {
            if n <= order && m <= order {
                let idx = s.index(n, m);
                s.coeffs[idx] += rational::int(c);
            }
        }
        s
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut coeffs = Vec::with_capacity((order + 1) * (order + 1));
        for n in 0..=order {
            for m in 0..=order {
                coeffs.push(f(n, m));
            }
        }
        Series2 { order, coeffs }
    }

    /// Embeds a series in `x` as the `y^0` row.
    pub fn from_x_series(s: &Series1) -> Self {
        let order = s.order();
        Self::from_fn(order, |n, m| {
            if m == 0 {
                s.coeff(n).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Embeds a series in `y` as the `x^0` column.
    pub fn from_y_series(s: &Series1) -> Self {
        let order = s.order();
        Self::from_fn(order, |n, m| {
            if n == 0 {
                s.coeff(m).clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn index(&self, n: usize, m: usize) -> usize {
        n * (self.order + 1) + m
    }

    /// Coefficient of `x^n y^m`.
    ///
    /// # Panics
    /// If `n` or `m` exceeds the order.
    pub fn coeff(&self, n: usize, m: usize) -> &Rational {
        assert!(n <= self.order && m <= self.order, "index past truncation order");
        &self.coeffs[self.index(n, m)]
    }

    pub fn get(&self, n: usize, m: usize) -> Result<&Rational> {
        if n > self.order || m > self.order {
            return Err(Error::OrderExceeded {
                requested: n.max(m),
                order: self.order,
            });
        }
        Ok(&self.coeffs[self.index(n, m)])
    }

    fn set(&mut self, n: usize, m: usize, c: Rational) {
        let idx = self.index(n, m);
        self.coeffs[idx] = c;
    }

    /// Row `n` of the grid, `c[n][0..=N]`.
    pub fn row(&self, n: usize) -> &[Rational] {
        let w = self.order + 1;
        &self.coeffs[n * w..(n + 1) * w]
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::from_fn(order, |n, m| self.coeff(n, m).clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |n, m| f(self.coeff(n, m), other.coeff(n, m)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Nonzero entries grouped by row, restricted to `n, m <= order`.
    fn sparse_rows(&self, order: usize) -> Vec<Vec<(usize, &Rational)>> {
        (0..=order.min(self.order))
            .map(|n| {
                self.row(n)[..=order.min(self.order)]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect()
    }

    /// Two-dimensional Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let w = order + 1;
        let mut out = vec![Rational::zero(); w * w];
        let lhs = self.sparse_rows(order);
        let rhs = other.sparse_rows(order);
        for (i, lrow) in lhs.iter().enumerate() {
            for &(j, a) in lrow {
                for (k, rrow) in rhs.iter().enumerate().take(w - i) {
                    let base = (i + k) * w + j;
                    for &(l, b) in rrow {
                        if j + l > order {
                            break;
                        }
                        out[base + l] += a * b;
                    }
                }
            }
        }
        Series2 { order, coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a00 = self.coeff(0, 0);
        if a00.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = a00.recip();
        let order = self.order;
        let w = order + 1;
        let mut tail: Vec<(usize, usize, &Rational)> = Vec::new();
        for (i, row) in self.sparse_rows(order).into_iter().enumerate() {
            for (j, c) in row {
                if i + j > 0 {
                    tail.push((i, j, c));
                }
            }
        }
        let mut out = vec![Rational::zero(); w * w];
        out[0] = inv.clone();
        for n in 0..=order {
            for m in 0..=order {
                if n + m == 0 {
                    continue;
                }
                let mut acc = Rational::zero();
                for &(i, j, a) in &tail {
                    if i > n {
                        break;
                    }
                    if j <= m {
                        acc += a * &out[(n - i) * w + (m - j)];
                    }
                }
                out[n * w + m] = -(acc * &inv);
            }
        }
        Ok(Series2 { order, coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// `sum_k outer[k] inner^k`, truncated to `inner.order()`.
    ///
    /// `inner` must have a zero constant term. Terms of `outer` past its
    /// length count as zero; pass at least `2 * order + 1` of them (fewer are
    /// needed when the lowest total degree of `inner` exceeds one).
    pub fn compose_outer(outer: &[Rational], inner: &Self) -> Result<Self> {
        if !inner.coeff(0, 0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = inner.order;
        let valuation = (0..=order)
            .flat_map(|n| (0..=order).map(move |m| (n, m)))
            .filter(|&(n, m)| !inner.coeff(n, m).is_zero())
            .map(|(n, m)| n + m)
            .min();
        let Some(valuation) = valuation else {
            let c0 = outer.first().cloned().unwrap_or_else(Rational::zero);
            return Ok(Self::constant(c0, order));
        };
        let terms = outer.len().min(2 * order / valuation + 1);
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

    /// `int_0^x`, constant of integration zero.
    pub fn integrate_x(&self) -> Self {
        Self::from_fn(self.order, |n, m| {
            if n == 0 {
                Rational::zero()
            } else {
                self.coeff(n - 1, m) / rational::int(n as i64)
            }
        })
    }

    /// `int_0^y`, constant of integration zero.
    pub fn integrate_y(&self) -> Self {
        Self::from_fn(self.order, |n, m| {
            if m == 0 {
                Rational::zero()
            } else {
                self.coeff(n, m - 1) / rational::int(m as i64)
            }
        })
    }

    /// `d/dy`; the result has order one less.
    pub fn differentiate_y(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::OrderExhausted);
        }
        Ok(Self::from_fn(self.order - 1, |n, m| {
            self.coeff(n, m + 1) * rational::int(m as i64 + 1)
        }))
    }

    /// `d/dx`; the result has order one less.
    pub fn differentiate_x(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::OrderExhausted);
        }
        Ok(Self::from_fn(self.order - 1, |n, m| {
            self.coeff(n + 1, m) * rational::int(n as i64 + 1)
        }))
    }

    /// Divides by `x`; requires the `x^0` row to vanish. Order drops by one.
    pub fn div_x(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::OrderExhausted);
        }
        if self.row(0).iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { power: 0, shift: 1 });
        }
        Ok(Self::from_fn(self.order - 1, |n, m| self.coeff(n + 1, m).clone()))
    }

    /// Substitutes the constant `v` for `y`: `[x^n] = sum_m c[n][m] v^m`.
    pub fn subst_y_value(&self, v: &Rational) -> Series1 {
        let powers: Vec<Rational> = (0..=self.order).map(|m| rational::pow(v, m)).collect();
        Series1::from_fn(self.order, |n| {
            self.row(n)
                .iter()
                .zip(&powers)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, p)| c * p)
                .sum()
        })
    }

    /// Substitutes `y = x`: `[x^n] = sum_{m<=n} c[n-m][m]`.
    pub fn diagonal(&self) -> Series1 {
        Series1::from_fn(self.order, |n| (0..=n).map(|m| self.coeff(n - m, m).clone()).sum())
    }

    /// Selects even- or odd-indexed rows or columns and reindexes them.
    ///
    /// Rows/even keeps `c[2n][m]`, rows/odd keeps `c[2n-1][m]` (`n >= 1`,
    /// zero at `n = 0`), and likewise for columns. This is the index form of
    /// the `(F(s) +- F(-s)) / 2` (and `/ 2s`) substitutions with `s = sqrt(x)`
    /// or `sqrt(y)`. The result has order `floor(N / 2)`.
    pub fn parity_extract(&self, axis: Axis, parity: Parity) -> Self {
        let half = self.order / 2;
        let pick = |k: usize| -> Option<usize> {
            match parity {
                Parity::Even => Some(2 * k),
                Parity::Odd => (k >= 1).then(|| 2 * k - 1),
            }
        };
        Self::from_fn(half, |n, m| {
            let src = match axis {
                Axis::Rows => pick(n).map(|r| (r, m)),
                Axis::Cols => pick(m).map(|c| (n, c)),
            };
            src.map(|(r, c)| self.coeff(r, c).clone())
                .unwrap_or_else(Rational::zero)
        })
    }

    /// Truncated double sum at a floating-point point.
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        (0..=self.order)
            .rev()
            .fold(0.0, |acc, n| {
                let row = self.row(n).iter().rev().fold(0.0, |r, c| r * y + rational::to_f64(c));
                acc * x + row
            })
    }
}

/// Coefficientwise equality up to the smaller of the two orders.
impl PartialEq for Series2 {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        (0..=order).all(|n| self.row(n)[..=order] == other.row(n)[..=order])
    }
}
