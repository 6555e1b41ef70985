//! Fixed values: hand-evaluated cases and values quoted with the closed forms,
//! each compared against an oracle that does not share code with the
//! expansion under test.

mod common;

use std::f64::consts::{LN_2, PI};

use common::{q, RecipOracle};
use num_bigint::BigInt;
use num_traits::Zero;
use recipbinom::closed_forms::{self, ClosedFormId, SumId};
use recipbinom::identities::{self, direct_sum};
use recipbinom::numeric;
use recipbinom::riordan;
use recipbinom::series::sequences;
use recipbinom::triangles::{self, Family, TableRow, TriangleVariant};
use recipbinom::{Axis, Parity, Rational, Series1, Series2};

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn harmonic(n: i64) -> Rational {
    (1..=n).map(|k| q(1, k)).sum()
}

#[test]
fn harmonic_numbers_from_a_product() {
    let order = 12;
    let geometric = Series1::poly(&[1, -1], order).reciprocal().unwrap();
    let x = Series1::monomial(1, int(1), order);
    let log = Series1::compose(&sequences::log1p(order + 1), &x.neg()).unwrap();
    let prod = geometric.mul(&log);
    for n in 1..=order {
        assert_eq!(prod.coeff(n), &-harmonic(n as i64), "n = {n}");
    }
}

#[test]
fn fibonacci_denominators() {
    let fib = |n: u64| -> BigInt {
        let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
        for _ in 0..n {
            let t = &a + &b;
            a = std::mem::replace(&mut b, t);
        }
        a
    };
    let plain = Series1::poly(&[1, -1, -1], 15).reciprocal().unwrap();
    let alternating = Series1::poly(&[1, 1, -1], 15).reciprocal().unwrap();
    for n in 0..=15u64 {
        assert_eq!(plain.coeff(n as usize), &Rational::from_integer(fib(n + 1)));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(alternating.coeff(n as usize), &(Rational::from_integer(fib(n + 1)) * int(sign)));
    }
}

#[test]
fn dilog_of_x() {
    let x = Series1::monomial(1, int(1), 10);
    let li = Series1::compose(&sequences::dilog(11), &x).unwrap();
    for n in 1..=10 {
        assert_eq!(li.coeff(n), &q(1, (n * n) as i64));
    }
}

#[test]
fn integrating_the_triangle() {
    let o = RecipOracle::new(12);
    let a = Series2::from_fn(12, |n, m| o.recip(n as i64, m as i64));
    let i = a.integrate_x();
    for n in 1..=12i64 {
        for m in 0..=12i64 {
            let expect = if m < n { o.recip(n - 1, m) / int(n) } else { Rational::zero() };
            assert_eq!(i.coeff(n as usize, m as usize), &expect);
        }
    }
}

#[test]
fn row_sums_by_substitution() {
    let o = RecipOracle::new(15);
    let a = Series2::from_fn(15, |n, m| o.recip(n as i64, m as i64));
    let rows = a.subst_y_value(&int(1));
    for n in 0..=15i64 {
        let direct: Rational = (0..=n).map(|m| o.recip(n, m)).sum();
        assert_eq!(rows.coeff(n as usize), &direct);
    }
}

#[test]
fn parity_selections() {
    let o = RecipOracle::new(40);
    let a = Series2::from_fn(40, |n, m| o.recip(n as i64, m as i64));
    let even_rows = a.parity_extract(Axis::Rows, Parity::Even);
    let odd_cols = a.parity_extract(Axis::Cols, Parity::Odd);
    for n in 0..=20i64 {
        for m in 0..=20i64 {
            assert_eq!(even_rows.coeff(n as usize, m as usize), &o.recip(2 * n, m));
            let expect = if m == 0 { Rational::zero() } else { o.recip(n, 2 * m - 1) };
            assert_eq!(odd_cols.coeff(n as usize, m as usize), &expect);
        }
    }
}

#[test]
fn table_cells() {
    let cell = |c, r, n, m| triangles::table_entry(TriangleVariant::new(c, r), n, m);
    assert_eq!(cell(Family::A, TableRow::Base, 4, 2), q(1, 6));
    assert_eq!(cell(Family::J, TableRow::Base, 3, 2), q(1, 12));
    assert_eq!(cell(Family::K, TableRow::EvenRows, 2, 3), q(1, 18));
}

#[test]
fn riordan_series_first_row() {
    let f = riordan::f_coeff_series(10);
    for k in 1..=10 {
        assert_eq!(f.coeff(0, k), &int(1));
    }
    // F(0, y) = y / (1 - y)
    assert!((numeric::eval_f_xy(0.0, 0.5) - 1.0).abs() < 1e-15);
}

#[test]
fn weighted_row_sum_value() {
    let v = numeric::eval_a(0.5, 1.0).unwrap();
    assert!((v - (8.0 / 3.0 + 8.0 / 9.0 * LN_2)).abs() < 1e-14);
    assert_eq!(numeric::eval_a(0.0, 0.0).unwrap(), 1.0);
    assert!((numeric::dilog(1.0).value - PI * PI / 6.0).abs() < 1e-15);
}

#[test]
fn half_dilog_against_series() {
    let series: f64 = (1..80).map(|k| 0.5f64.powi(k) / (k * k) as f64).sum();
    let v = numeric::dilog(0.5).value;
    assert!((v - series).abs() < 1e-13);
    assert!((v - (PI * PI / 12.0 - LN_2 * LN_2 / 2.0)).abs() < 1e-13);
}

#[test]
fn s9_sign() {
    let s9 = ClosedFormId::Sum(SumId::new(9).unwrap());
    assert_eq!(direct_sum(&s9, 1).unwrap(), int(1));
    assert_eq!(direct_sum(&s9, 2).unwrap(), int(1));
    // The printed 2 log(1-x) / (2-x) starts with -x.
    let printed = closed_forms::expand(&s9, 6).unwrap().univariate().unwrap();
    assert_eq!(printed.coeff(1), &int(-1));
    let report = identities::check_sum_gf(&s9, 20).unwrap();
    assert_eq!(report.variant.as_deref(), Some("sign flipped"));
}

#[test]
fn diagonal_sums() {
    let o = RecipOracle::new(12);
    let expect = [int(1), int(1), int(2), q(3, 2)];
    for (n, e) in expect.iter().enumerate() {
        let direct: Rational = (0..=n as i64).map(|m| o.recip(n as i64 - m, m)).sum();
        assert_eq!(&direct, e);
        assert_eq!(&direct_sum(&ClosedFormId::ADiag, n as i64).unwrap(), e);
    }
    let s1 = ClosedFormId::Sum(SumId::new(1).unwrap());
    assert_eq!(direct_sum(&s1, 0).unwrap(), int(1));
}

#[test]
fn exponential_sequences() {
    let fact = |n: u64| -> BigInt { (1..=n).map(BigInt::from).product() };
    let row_sums: Vec<BigInt> = (0..6u64).map(triangles::exp_row_sum).collect();
    let brute: Vec<BigInt> = (0..6u64).map(|n| (0..=n).map(|m| fact(m) * fact(n - m)).sum()).collect();
    assert_eq!(row_sums, brute);
    let expect: Vec<BigInt> = [1, 2, 5, 16, 64, 312].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(row_sums, expect);

    let o = RecipOracle::new(10);
    let diag: Vec<Rational> = (0..6i64)
        .map(|n| {
            let s: Rational = (0..=n).map(|m| o.recip(n - m, m)).sum();
            s * Rational::from_integer(fact(n as u64))
        })
        .collect();
    let expect: Vec<Rational> = [1, 1, 4, 9, 56, 190].iter().map(|&v| int(v)).collect();
    assert_eq!(diag, expect);
    let exported = recipbinom::cli::export_values_by_name("diag-factorial", 6).unwrap();
    assert_eq!(exported, expect);
}

#[test]
fn hand_evaluated_identity_cases() {
    // iden7 at n = 2: 1 = 3/2 - 1/2
    assert_eq!(harmonic(2) - harmonic(1) * q(1, 2), int(1));
    assert!(identities::check_iden7(2).status.is_pass());
    // iden6 at n = 2: 1/2
    assert!(identities::check_iden6(2).status.is_pass());
    // iden_diff at (2, 1): -1/2
    let o = RecipOracle::new(4);
    assert_eq!(o.recip(2, 1) - o.recip(1, 1), q(-1, 2));
    assert!(identities::check_iden_diff(2).status.is_pass());
    // iden_li at (2, 1): 3/2
    assert_eq!(int(1) + q(2, 4), q(3, 2));
    assert!(identities::check_iden_li(2).status.is_pass());
}
