//! Closed-form coefficient oracles.
//!
//! Everything here is computed from factorials and simple recurrences and
//! never touches the series engine, so it can serve as the independent side
//! of every exact comparison.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binom, factorial, int, recip_or_zero, Rational};
use crate::series::{Axis, Parity};

/// The four base generating functions (columns of the family table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    I,
    J,
    K,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::I, Family::J, Family::K];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::I => 'I',
            Family::J => 'J',
            Family::K => 'K',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "I" | "i" => Ok(Family::I),
            "J" | "j" => Ok(Family::J),
            "K" | "k" => Ok(Family::K),
            _ => Err(Error::Parse {
                what: "column (A, I, J or K)",
                input: s.to_string(),
            }),
        }
    }
}

/// Rows of the family table: the base triangle and its four parity
/// restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableRow {
    Base = 0,
    EvenRows = 1,
    EvenCols = 2,
    OddRows = 3,
    OddCols = 4,
}

impl TableRow {
    pub const ALL: [TableRow; 5] = [
        TableRow::Base,
        TableRow::EvenRows,
        TableRow::EvenCols,
        TableRow::OddRows,
        TableRow::OddCols,
    ];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Result<Self> {
        Self::ALL.get(i as usize).copied().ok_or(Error::Parse {
            what: "table row (0-4)",
            input: i.to_string(),
        })
    }

    /// The index selection realising this row, `None` for the base row.
    pub fn selection(self) -> Option<(Axis, Parity)> {
        match self {
            TableRow::Base => None,
            TableRow::EvenRows => Some((Axis::Rows, Parity::Even)),
            TableRow::EvenCols => Some((Axis::Cols, Parity::Even)),
            TableRow::OddRows => Some((Axis::Rows, Parity::Odd)),
            TableRow::OddCols => Some((Axis::Cols, Parity::Odd)),
        }
    }
}

/// One of the 20 cells of the family table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TriangleVariant {
    pub column: Family,
    pub row: TableRow,
}

impl TriangleVariant {
    pub fn new(column: Family, row: TableRow) -> Self {
        TriangleVariant { column, row }
    }

    pub fn all() -> impl Iterator<Item = TriangleVariant> {
        Family::ALL
            .into_iter()
            .flat_map(|c| TableRow::ALL.into_iter().map(move |r| TriangleVariant::new(c, r)))
    }
}

impl fmt::Display for TriangleVariant {
    /// `A`, `I3`, `K4`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            TableRow::Base => write!(f, "{}", self.column.letter()),
            r => write!(f, "{}{}", self.column.letter(), r.index()),
        }
    }
}

/// `1 / binom(n, m)` inside the triangle, zero outside it.
pub fn recip_binom(n: i64, m: i64) -> Rational {
    if n < 0 || m < 0 || m > n {
        return Rational::zero();
    }
    Rational::new(factorial(m as u64) * factorial((n - m) as u64), factorial(n as u64))
}

/// `n! / binom(n, m) = m! (n - m)!`.
pub fn exp_triangle(n: i64, m: i64) -> Result<BigInt> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::domain(format!("exp_triangle({n}, {m}) needs 0 <= m <= n")));
    }
    Ok(factorial(m as u64) * factorial((n - m) as u64))
}

/// `sum_m m! (n - m)!`.
pub fn exp_row_sum(n: u64) -> BigInt {
    (0..=n).map(|m| factorial(m) * factorial(n - m)).sum()
}

/// `binom(a, b)` restricted to `0 <= b <= a`; zero elsewhere (including
/// negative upper index, where the general convention would not vanish).
fn tb(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        BigInt::zero()
    } else {
        binom(a, b)
    }
}

/// `1 / (f1 * f2 * ... * b)`, zero if any factor is nonpositive or `b = 0`.
fn cell(factors: &[i64], b: BigInt) -> Rational {
    if factors.iter().any(|&f| f <= 0) {
        return Rational::zero();
    }
    let prod: BigInt = factors.iter().map(|&f| BigInt::from(f)).product::<BigInt>() * b;
    recip_or_zero(&prod)
}

/// Value of the family-table cell `v` at `(n, m)`; zero outside the cell's
/// index domain.
pub fn table_entry(v: TriangleVariant, n: i64, m: i64) -> Rational {
    use Family::*;
    use TableRow::*;
    match (v.column, v.row) {
        (A, Base) => cell(&[], tb(n, m)),
        (A, EvenRows) => cell(&[], tb(2 * n, m)),
        (A, EvenCols) => cell(&[], tb(n, 2 * m)),
        (A, OddRows) => cell(&[], tb(2 * n - 1, m)),
        (A, OddCols) => cell(&[], tb(n, 2 * m - 1)),

        (I, Base) => cell(&[n], tb(n - 1, m)),
        (I, EvenRows) => cell(&[2 * n], tb(2 * n - 1, m)),
        (I, EvenCols) => cell(&[n], tb(n - 1, 2 * m)),
        (I, OddRows) => cell(&[2 * n - 1], tb(2 * n - 2, m)),
        (I, OddCols) => cell(&[n], tb(n - 1, 2 * m - 1)),

        (J, Base) => cell(&[n, m], tb(n - 1, m - 1)),
        (J, EvenRows) => cell(&[2 * n, m], tb(2 * n - 1, m - 1)),
        (J, EvenCols) => cell(&[n, 2 * m], tb(n - 1, 2 * m - 1)),
        (J, OddRows) => cell(&[2 * n - 1, m], tb(2 * n - 2, m - 1)),
        (J, OddCols) => cell(&[n, 2 * m - 1], tb(n - 1, 2 * m - 2)),

        (K, Base) => cell(&[m], tb(n, m - 1)),
        (K, EvenRows) => cell(&[m], tb(2 * n, m - 1)),
        (K, EvenCols) => cell(&[2 * m], tb(n, 2 * m - 1)),
        (K, OddRows) => cell(&[m], tb(2 * n - 1, m - 1)),
        (K, OddCols) => cell(&[2 * m - 1], tb(n, 2 * m - 2)),
    }
}

/// The nonzero cells of row `n` as `(m, value)`, in increasing `m`.
pub fn row_cells(v: TriangleVariant, n: i64) -> Vec<(i64, Rational)> {
    // Every cell vanishes for m > 2n + 2 (the widest row is K1 at m = 2n + 1).
    (0..=2 * n + 2)
        .map(|m| (m, table_entry(v, n, m)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// `H_n = sum_{k=1..n} 1/k`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).map(|k| Rational::new(BigInt::one(), BigInt::from(k))).sum()
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `binom` promoted to a rational.
pub fn binom_q(a: i64, b: i64) -> Rational {
    Rational::from_integer(binom(a, b))
}

pub(crate) fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn v(c: Family, r: TableRow) -> TriangleVariant {
        TriangleVariant::new(c, r)
    }

    #[test]
    fn recip_binom_values() {
        assert_eq!(recip_binom(4, 2), ratio(1, 6));
        assert_eq!(recip_binom(9, 0), int(1));
        assert_eq!(recip_binom(5, 7), int(0));
        assert_eq!(recip_binom(3, -1), int(0));
    }

    #[test]
    fn exp_triangle_values() {
        assert_eq!(exp_triangle(3, 1).unwrap(), BigInt::from(2));
        assert!(exp_triangle(2, 3).is_err());
        assert_eq!(exp_row_sum(3), BigInt::from(16));
        assert_eq!(exp_row_sum(0), BigInt::from(1));
    }

    #[test]
    fn table_cells_from_the_family_table() {
        assert_eq!(table_entry(v(Family::A, TableRow::Base), 4, 2), ratio(1, 6));
        assert_eq!(table_entry(v(Family::J, TableRow::Base), 3, 2), ratio(1, 12));
        assert_eq!(table_entry(v(Family::K, TableRow::EvenRows), 2, 3), ratio(1, 18));
        // Domain edges.
        assert_eq!(table_entry(v(Family::I, TableRow::Base), 0, 0), int(0));
        assert_eq!(table_entry(v(Family::I, TableRow::Base), 3, 3), int(0));
        assert_eq!(table_entry(v(Family::K, TableRow::Base), 0, 1), int(1));
        assert_eq!(table_entry(v(Family::K, TableRow::Base), 2, 0), int(0));
        assert_eq!(table_entry(v(Family::A, TableRow::OddRows), 0, 0), int(0));
        assert_eq!(table_entry(v(Family::A, TableRow::OddCols), 3, 0), int(0));
    }

    #[test]
    fn harmonic_and_fibonacci() {
        assert_eq!(harmonic(3), ratio(11, 6));
        assert_eq!(harmonic(0), int(0));
        assert_eq!(fibonacci(6), BigInt::from(8));
        assert_eq!(fibonacci(0), BigInt::zero());
        assert_eq!(fibonacci(1), BigInt::one());
    }

    #[test]
    fn recip_binom_symmetry() {
        for n in 0..=60 {
            for m in 0..=n {
                assert_eq!(recip_binom(n, m), recip_binom(n, n - m));
            }
        }
    }

    #[test]
    fn exp_triangle_times_binomial_is_factorial() {
        for n in 0..=30i64 {
            for m in 0..=n {
                assert_eq!(exp_triangle(n, m).unwrap() * binom(n, m), factorial(n as u64));
            }
        }
    }

    #[test]
    fn parity_rows_are_reindexed_base_rows() {
        for c in Family::ALL {
            let base = v(c, TableRow::Base);
            for n in 0..=30i64 {
                for m in 0..=30i64 {
                    assert_eq!(table_entry(v(c, TableRow::EvenRows), n, m), table_entry(base, 2 * n, m));
                    assert_eq!(table_entry(v(c, TableRow::EvenCols), n, m), table_entry(base, n, 2 * m));
                    let odd_r = if n >= 1 { table_entry(base, 2 * n - 1, m) } else { int(0) };
                    assert_eq!(table_entry(v(c, TableRow::OddRows), n, m), odd_r);
                    let odd_c = if m >= 1 { table_entry(base, n, 2 * m - 1) } else { int(0) };
                    assert_eq!(table_entry(v(c, TableRow::OddCols), n, m), odd_c);
                }
            }
        }
    }

    #[test]
    fn row_cells_of_k() {
        let cells = row_cells(v(Family::K, TableRow::Base), 1);
        assert_eq!(cells, vec![(1, int(1)), (2, ratio(1, 2))]);
        assert!(row_cells(v(Family::I, TableRow::Base), 0).is_empty());
    }

    #[test]
    fn variant_names() {
        let names: Vec<String> = TriangleVariant::all().map(|v| v.to_string()).collect();
        assert_eq!(names.len(), 20);
        assert_eq!(names[0], "A");
        assert_eq!(names[9], "I4");
        assert_eq!(names[19], "K4");
    }
}
