//! Riordan arrays and the composition route to `A(x, y)`.
//!
//! A Riordan array `(F, G)` with `G(0) = 0` is the triangle
//! `R(n, k) = [x^n] F(x) G(x)^k`; applying it to a sequence `q` gives the
//! coefficients of `F(x) Q(G(x))`. The reciprocal-binomial generating function
//! follows from the alternating-sum identity
//!
//! ```text
//! sum_k (-1)^k binom(n, k) m / (m + k) = 1 / binom(n + m, n)
//! ```
//!
//! read as a Riordan composition with the bivariate series
//! `F(x, y) = sum_{n>=0, k>=1} k / (n + k) x^n y^k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identities::{CheckReport, Checker};
use crate::rational::{int, ratio, Rational};
use crate::series::Series2;
use crate::series::Series1;
use crate::triangles::{binom_q, recip_binom, sign};

#[derive(Clone, Debug)]
pub struct RiordanArray {
    f: Series1,
    g: Series1,
}

impl RiordanArray {
    /// Fails with [`Error::NonzeroConstantTerm`] unless `g(0) = 0`.
    pub fn new(f: Series1, g: Series1) -> Result<Self> {
        if !g.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(RiordanArray { f, g })
    }

    /// The Pascal array `(1/(1-x), x/(1-x))`.
    pub fn pascal(order: usize) -> Self {
        let f = Series1::poly(&[1, -1], order).reciprocal().expect("unit constant");
        let g = Series1::monomial(1, int(1), order).mul(&f);
        RiordanArray { f, g }
    }

    pub fn f(&self) -> &Series1 {
        &self.f
    }

    pub fn g(&self) -> &Series1 {
        &self.g
    }

    pub fn order(&self) -> usize {
        self.f.order().min(self.g.order())
    }

    /// Columns `F G^k` for `k = 0..=order`.
    fn columns(&self) -> Vec<Series1> {
        let order = self.order();
        let g = self.g.truncate(order);
        let mut cols = Vec::with_capacity(order + 1);
        let mut col = self.f.truncate(order);
        for _ in 0..=order {
            let next = col.mul(&g);
            cols.push(col);
            col = next;
        }
        cols
    }

    /// `R(n, k) = [x^n] F G^k`.
    pub fn r_coeff(&self, n: usize, k: usize) -> Result<Rational> {
        let order = self.order();
        if n > order {
            return Err(Error::OrderExceeded { requested: n, order });
        }
        if k > n {
            // G^k starts at x^k.
            return Ok(Rational::zero());
        }
        let mut col = self.f.truncate(order);
        for _ in 0..k {
            col = col.mul(&self.g);
        }
        Ok(col.coeff(n).clone())
    }

    /// `b[n] = sum_{k<=n} R(n, k) q[k]`, i.e. the coefficients of `F Q(G)`.
    pub fn apply(&self, q: &[Rational]) -> Result<Series1> {
        let order = self.order();
        if q.len() < order + 1 {
            return Err(Error::OrderExceeded {
                requested: order,
                order: q.len().saturating_sub(1),
            });
        }
        let mut b = vec![Rational::zero(); order + 1];
        for (k, col) in self.columns().iter().enumerate() {
            if q[k].is_zero() {
                continue;
            }
            for (n, slot) in b.iter_mut().enumerate().skip(k) {
                *slot += col.coeff(n) * &q[k];
            }
        }
        Ok(Series1::from_coeffs(b))
    }
}

/// Checks `sum_k (-1)^k binom(n,k) m/(m+k) = 1/binom(n+m, n)` at one point.
pub fn prudnikov_check(n: i64, m: i64) -> CheckReport {
    let mut c = Checker::new("prudnikov", format!("n = {n}, m = {m}"));
    c.compare(n, Some(m), prudnikov_lhs(n, m), recip_binom(n + m, n));
    c.finish()
}

/// The same identity for every `n >= 0`, `m >= 1` with `n + m <= max_total`.
pub fn prudnikov_check_range(max_total: i64) -> CheckReport {
    let mut c = Checker::new("prudnikov", format!("n >= 0, m >= 1, n + m <= {max_total}"));
    for total in 1..=max_total {
        for m in 1..=total {
            let n = total - m;
            c.compare(n, Some(m), prudnikov_lhs(n, m), recip_binom(n + m, n));
        }
    }
    c.finish()
}

fn prudnikov_lhs(n: i64, m: i64) -> Rational {
    (0..=n)
        .map(|k| sign(k) * binom_q(n, k) * ratio(m, m + k))
        .sum()
}

/// `F(x, y) = sum_{n>=0, k>=1} k/(n+k) x^n y^k`, built from its coefficients.
pub fn f_coeff_series(order: usize) -> Series2 {
    Series2::from_fn(order, |n, k| {
        if k == 0 {
            Rational::zero()
        } else {
            ratio(k as i64, (n + k) as i64)
        }
    })
}

/// `F(x, G)` with `G = xy / (xy - 1)`, summed as `sum_k P_k(x) G^k` where
/// `P_k(x) = sum_n k/(n+k) x^n`.
fn f_of_xy_over_xy_minus_one(order: usize) -> Result<(Series2, Series2)> {
    let f = f_coeff_series(order);
    let xy_minus_one = Series2::poly(&[(1, 1, 1), (0, 0, -1)], order);
    let g = Series2::poly(&[(1, 1, 1)], order).div(&xy_minus_one)?;
    let mut total = Series2::zero(order);
    let mut g_pow = Series2::one(order);
    // G^k starts at total degree 2k, so k <= order suffices.
    for k in 1..=order {
        g_pow = g_pow.mul(&g);
        let p_k = Series2::from_fn(order, |n, m| {
            if m == 0 {
                f.coeff(n, k).clone()
            } else {
                Rational::zero()
            }
        });
        total = total.add(&p_k.mul(&g_pow));
    }
    Ok((total, xy_minus_one))
}

/// Rebuilds `A(x, y)` from the Riordan composition:
///
/// ```text
/// A(x, y) = 1/(1 - x) + F(x, xy/(xy - 1)) / (xy - 1)
/// ```
///
/// The `1/(1-x)` term supplies column `m = 0`, where the alternating-sum
/// identity degenerates (`m/(m+k)` vanishes for `k >= 1`).
pub fn reconstruct_a(order: usize) -> Result<Series2> {
    let (f_sub, xy_minus_one) = f_of_xy_over_xy_minus_one(order)?;
    let first_column = Series2::poly(&[(0, 0, 1), (1, 0, -1)], order).reciprocal()?;
    Ok(first_column.add(&f_sub.div(&xy_minus_one)?))
}

/// The composition exactly as it is usually printed,
/// `(1 + F(x, xy/(xy-1))) / (xy - 1)`. It does not reproduce the reciprocal
/// binomial triangle (already `[x^0 y^0] = -1`); kept so reports can show
/// the discrepancy.
pub fn reconstruct_a_printed(order: usize) -> Result<Series2> {
    let (f_sub, xy_minus_one) = f_of_xy_over_xy_minus_one(order)?;
    Series2::one(order).add(&f_sub).div(&xy_minus_one)
}

/// Compares [`reconstruct_a`] with the factorial oracle on the full grid.
pub fn reconstruct_a_check(order: usize) -> Result<CheckReport> {
    let rebuilt = reconstruct_a(order)?;
    let mut c = Checker::new("reconstruct_A", format!("0 <= n, m <= {order}"));
    for n in 0..=order {
        for m in 0..=order {
            c.compare(n as i64, Some(m as i64), rebuilt.coeff(n, m).clone(), recip_binom(n as i64, m as i64));
        }
    }
    let printed = reconstruct_a_printed(order)?;
    let mut report = c.finish();
    if printed != rebuilt {
        report.note = Some(format!(
            "printed form (1 + F(x, xy/(xy-1)))/(xy-1) differs: [x^0 y^0] = {}",
            crate::rational::render(printed.coeff(0, 0))
        ));
    }
    Ok(report)
}
