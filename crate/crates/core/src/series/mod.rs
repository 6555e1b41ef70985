//! Exact truncated formal power series in one and two variables.
//!
//! Every binary operation truncates to the smaller operand order. Both
//! series types store a dense coefficient array with explicit zeros; the
//! multiplication and inversion kernels skip zero entries, so products
//! with sparse factors (polynomials, `log(1 - x y)`, ...) stay cheap even
//! though the storage is dense.

mod bivariate;
pub mod sequences;
mod univariate;

pub use bivariate::Series2;
pub use univariate::Series1;

use crate::error::{Error, Result};

/// Variable along which [`Series2::parity_extract`] selects indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// The `x` exponent `n` (triangle rows).
    Rows,
    /// The `y` exponent `m` (triangle columns).
    Cols,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Expands a closed form written in the auxiliary variable `t = sqrt(x)`
/// and returns its even part as a series in `x`.
///
/// `builder` receives the required `t`-order (`2 * order`) and must return
/// a series of at least that order. Any nonzero odd coefficient means the
/// closed form is not a function of `x` alone, which for the closed forms in
/// this crate indicates a transcription error.
pub fn sqrt_expand<F>(builder: F, order: usize) -> Result<Series1>
where
    F: FnOnce(usize) -> Result<Series1>,
{
    let t_order = 2 * order;
    let t = builder(t_order)?;
    if t.order() < t_order {
        return Err(Error::OrderExceeded {
            requested: t_order,
            order: t.order(),
        });
    }
    if let Some(index) = (1..=t_order)
        .step_by(2)
        .find(|&k| !num_traits::Zero::is_zero(t.coeff(k)))
    {
        return Err(Error::OddPartNonzero { index });
    }
    Ok(Series1::from_fn(order, |n| t.coeff(2 * n).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn sqrt_expand_t_squared() {
        let s = sqrt_expand(|ord| Ok(Series1::monomial(2, int(1), ord)), 4).unwrap();
        assert_eq!(s, Series1::monomial(1, int(1), 4));
    }

    #[test]
    fn sqrt_expand_rejects_odd() {
        let err = sqrt_expand(|ord| Ok(Series1::monomial(3, int(1), ord)), 4).unwrap_err();
        assert_eq!(err, Error::OddPartNonzero { index: 3 });
    }

    #[test]
    fn sqrt_expand_t_log_ratio() {
        // t * log((1+t)/(1-t)) = 2 * sum_k t^(2k+2) / (2k+1)
        let s = sqrt_expand(
            |ord| {
                let t = Series1::monomial(1, int(1), ord);
                let lp = Series1::compose(&sequences::log1p(ord + 1), &t)?;
                let lm = Series1::compose(&sequences::log1p(ord + 1), &t.neg())?;
                Ok(t.mul(&lp.sub(&lm)))
            },
            6,
        )
        .unwrap();
        assert!(num_traits::Zero::is_zero(s.coeff(0)));
        for k in 0..6 {
            assert_eq!(s.coeff(k + 1), &ratio(2, 2 * k as i64 + 1));
        }
    }

    #[test]
    fn sqrt_expand_short_builder() {
        let err = sqrt_expand(|_| Ok(Series1::constant(int(1), 3)), 2).unwrap_err();
        assert!(matches!(err, Error::OrderExceeded { .. }));
    }
}
