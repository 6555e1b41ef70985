//! Floating-point evaluation: the dilogarithm, closed forms inside their
//! convergence domain, the worked infinite-sum examples, column sums and the
//! Abel limit of the second `y`-derivative of `A`.
//!
//! Partial sums use Neumaier compensated summation in a fixed order, so every
//! result is reproducible bit for bit. Each [`SumResult`] carries an explicit
//! upper bound on the neglected tail.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::closed_forms::{ClosedFormId, SumId};
use crate::error::{Error, Result};
use crate::rational;
use crate::triangles::{recip_binom, Family, TableRow};

/// Compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dilog {
    pub value: f64,
    /// Set for `z > 1`, where `value` is the real part of the principal branch.
    pub branch_extended: bool,
}

/// `Li2(z)` for real `z`.
pub fn dilog(z: f64) -> Dilog {
    if z > 1.0 {
        // Re Li2(z) = pi^2/3 - ln^2(z)/2 - Li2(1/z)
        let ln = z.ln();
        return Dilog {
            value: PI * PI / 3.0 - 0.5 * ln * ln - dilog_real(1.0 / z),
            branch_extended: true,
        };
    }
    Dilog {
        value: dilog_real(z),
        branch_extended: false,
    }
}

fn dilog_real(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z == 1.0 {
        return PI * PI / 6.0;
    }
    if z.abs() <= 0.5 {
        return dilog_series(z);
    }
    if z > 0.5 {
        // reflection
        return PI * PI / 6.0 - z.ln() * (1.0 - z).ln() - dilog_series(1.0 - z);
    }
    if z >= -1.0 {
        // Landen: z/(z-1) lies in (1/3, 1/2]
        let l = (1.0 - z).ln();
        return -dilog_series(z / (z - 1.0)) - 0.5 * l * l;
    }
    // inversion for z < -1
    let l = (-z).ln();
    -PI * PI / 6.0 - 0.5 * l * l - dilog_real(1.0 / z)
}

fn dilog_series(z: f64) -> f64 {
    let mut sum = Neumaier::default();
    let mut p = z;
    for k in 1..200 {
        let term = p / (k * k) as f64;
        sum.add(term);
        if term.abs() < 1e-18 {
            break;
        }
        p *= z;
    }
    sum.total()
}

fn li2(z: f64) -> f64 {
    dilog(z).value
}

/// Conditions under which the closed form of `A` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DomainGuard {
    pub x: f64,
    pub y: f64,
    pub abs_x_below_one: bool,
    pub abs_xy_below_one: bool,
    pub denominator_nonzero: bool,
}

impl DomainGuard {
    pub fn new(x: f64, y: f64) -> Self {
        DomainGuard {
            x,
            y,
            abs_x_below_one: x.abs() < 1.0,
            abs_xy_below_one: (x * y).abs() < 1.0,
            denominator_nonzero: (1.0 + y - x * y).abs() > 0.0,
        }
    }

    pub fn passes(&self) -> bool {
        self.abs_x_below_one && self.abs_xy_below_one && self.denominator_nonzero
    }

    pub fn check(&self) -> Result<()> {
        let violated = if !self.abs_x_below_one {
            "|x| < 1"
        } else if !self.abs_xy_below_one {
            "|xy| < 1"
        } else if !self.denominator_nonzero {
            "|1 + y - xy| > 0"
        } else {
            return Ok(());
        };
        Err(Error::domain(format!(
            "({}, {}) violates {violated}",
            self.x, self.y
        )))
    }
}

fn finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(format!("{what} is not finite here")))
    }
}

pub fn eval_a(x: f64, y: f64) -> Result<f64> {
    DomainGuard::new(x, y).check()?;
    let d = 1.0 + y - x * y;
    let log = (-x).ln_1p() + (-x * y).ln_1p();
    let v = -y * log / (d * d) + x * y * y / ((1.0 - x * y) * d) + 1.0 / (1.0 - x);
    finite(v, "A")
}

pub fn eval_i(x: f64, y: f64) -> Result<f64> {
    DomainGuard::new(x, y).check()?;
    let arg = -x + (x * x - x) * y;
    if arg <= -1.0 {
        return Err(Error::domain("I: logarithm argument 1 - x + (x^2 - x) y is not positive"));
    }
    let denom = (x - 1.0) * y - 1.0;
    if denom == 0.0 {
        return Err(Error::domain("I: (x - 1) y - 1 vanishes"));
    }
    finite(arg.ln_1p() / denom, "I")
}

/// `x (1 + (1 - x) y)`, with the principal-branch guard shared by `J` and `K`.
fn j_arg(x: f64, y: f64) -> Result<f64> {
    DomainGuard::new(x, y).check()?;
    let u = x * (1.0 + (1.0 - x) * y);
    if u > 1.0 {
        return Err(Error::domain(format!(
            "Li2 argument x(1 + (1-x)y) = {u} lies outside the principal branch"
        )));
    }
    Ok(u)
}

pub fn eval_j(x: f64, y: f64) -> Result<f64> {
    let u = j_arg(x, y)?;
    finite((li2(u) - li2(x)) / (1.0 - x), "J")
}

pub fn eval_k(x: f64, y: f64) -> Result<f64> {
    let u = j_arg(x, y)?;
    if x == 0.0 {
        return Ok(y);
    }
    let d = 1.0 + (1.0 - x) * y;
    if u == 1.0 || d == 0.0 {
        return Err(Error::domain("K: logarithmic singularity"));
    }
    let bracket = (-x).ln_1p() / x - (1.0 + (1.0 - 2.0 * x) * y) * (-u).ln_1p() / (x * d);
    let v = bracket / (1.0 - x) + (li2(u) - li2(x)) / ((1.0 - x) * (1.0 - x));
    finite(v, "K")
}

fn eval_family(f: Family, x: f64, y: f64) -> Result<f64> {
    match f {
        Family::A => eval_a(x, y),
        Family::I => eval_i(x, y),
        Family::J => eval_j(x, y),
        Family::K => eval_k(x, y),
    }
}

/// `F(x, y) = xy/(x-y)^2 ln((1-y)/(1-x)) - y^2/((x-y)(1-y))`
pub fn eval_f_xy(x: f64, y: f64) -> f64 {
    let d = x - y;
    x * y / (d * d) * ((1.0 - y) / (1.0 - x)).ln() - y * y / (d * (1.0 - y))
}

/// The printed explicit form of `A1` with `first_sign` in front of its first
/// logarithm (`+1` as displayed; `-1` matches the definition).
pub fn eval_a1_display(x: f64, y: f64, first_sign: f64) -> f64 {
    let s = x.sqrt();
    let first = first_sign * y * ((1.0 - s) * (1.0 - s * y)).ln() / (-1.0 - y + s * y).powi(2)
        + s * y * y / ((1.0 - s * y) * (1.0 + y - s * y))
        + 1.0 / (1.0 - s);
    let second = -y * ((1.0 + s) * (1.0 + s * y)).ln() / (1.0 + y + s * y).powi(2)
        + (-s) * y * y / ((1.0 + s * y) * (1.0 + y + s * y))
        + 1.0 / (1.0 + s);
    0.5 * (first + second)
}

fn sqrt_nonneg(v: f64, which: &str) -> Result<f64> {
    if v < 0.0 {
        return Err(Error::domain(format!("parity variant needs {which} >= 0")));
    }
    Ok(v.sqrt())
}

/// IEEE double evaluation of a closed form; `y` is ignored for univariate ids.
///
/// Parity variants use the index-consistent definitions, e.g.
/// `A3(x, y) = sqrt(x) (A(sqrt x, y) - A(-sqrt x, y)) / 2`.
pub fn eval_closed(id: &ClosedFormId, x: f64, y: f64) -> Result<f64> {
    match id {
        ClosedFormId::Triangle(v) => {
            let f = |a, b| eval_family(v.column, a, b);
            match v.row {
                TableRow::Base => f(x, y),
                TableRow::EvenRows => {
                    let s = sqrt_nonneg(x, "x")?;
                    Ok(0.5 * (f(s, y)? + f(-s, y)?))
                }
                TableRow::OddRows => {
                    let s = sqrt_nonneg(x, "x")?;
                    Ok(0.5 * s * (f(s, y)? - f(-s, y)?))
                }
                TableRow::EvenCols => {
                    let s = sqrt_nonneg(y, "y")?;
                    Ok(0.5 * (f(x, s)? + f(x, -s)?))
                }
                TableRow::OddCols => {
                    let s = sqrt_nonneg(y, "y")?;
                    Ok(0.5 * s * (f(x, s)? - f(x, -s)?))
                }
            }
        }
        ClosedFormId::Fxy => {
            if x.abs() >= 1.0 || y.abs() >= 1.0 || x == y {
                return Err(Error::domain("F_xy needs |x|, |y| < 1 and x != y"));
            }
            Ok(eval_f_xy(x, y))
        }
        ClosedFormId::ARow { a, b } => {
            let (a, b) = (rational::to_f64(a), rational::to_f64(b));
            univariate_guard(x)?;
            let d = 1.0 - a * b * x + b;
            let v = -b * ((-a * x).ln_1p() + (-b * x).ln_1p()) / (d * d)
                + b * b * x / ((1.0 - b * x) * d)
                + 1.0 / (1.0 - a * x);
            finite(v, "A_row")
        }
        ClosedFormId::ADiag => {
            univariate_guard(x)?;
            let q = 1.0 - x - x * x;
            let v = (2.0 * x + 1.0) / ((x - 1.0) * (x + 1.0) * (x * x - x - 1.0))
                - x * (2.0 * (-x).ln_1p() + x.ln_1p()) / (q * q);
            finite(v, "A_diag")
        }
        ClosedFormId::Sum(s) => eval_sum(*s, x),
    }
}

fn univariate_guard(x: f64) -> Result<()> {
    if x.abs() >= 1.0 {
        return Err(Error::domain(format!("|x| < 1 required, got {x}")));
    }
    Ok(())
}

fn eval_sum(s: SumId, x: f64) -> Result<f64> {
    univariate_guard(x)?;
    let l1m = (-x).ln_1p();
    let v = match s.get() {
        1 | 5 => {
            let t = sqrt_nonneg(x, "x")?;
            if s.get() == 1 {
                let num = 4.0 * t * (t.ln_1p() - (-t).ln_1p()) - (x + 4.0) * (-x).ln_1p();
                num / ((x - 4.0) * (x - 4.0)) + (2.0 * x + 4.0) / ((x - 4.0) * (x - 1.0))
            } else {
                6.0 * x / (x * x - 5.0 * x + 4.0) + t * t.ln_1p() / ((2.0 + t) * (2.0 + t))
                    - t * (-t).ln_1p() / ((2.0 - t) * (2.0 - t))
            }
        }
        3 => {
            (-x * x).ln_1p() / (2.0 * x * x) + 3.0 / ((x - 2.0) * (x - 1.0) * (x + 1.0))
                - l1m / ((2.0 - x) * (2.0 - x))
        }
        7 => {
            -(-x * x).ln_1p() / (x * x) - 1.0 / (x + 1.0) + x / ((1.0 - x) * (2.0 - x))
                - 2.0 * l1m / ((2.0 - x) * (2.0 - x))
        }
        9 => 2.0 * l1m / (2.0 - x),
        10 => (-x + x * (x * x - x)).ln_1p() / ((x - 1.0) * x - 1.0),
        11 => (li2(2.0 * x - x * x) - li2(x)) / (1.0 - x),
        12 => (li2(x + x * x - x * x * x) - li2(x)) / (1.0 - x),
        13 => {
            (li2(2.0 * x - x * x) - li2(x)) / ((1.0 - x) * (1.0 - x))
                + (3.0 * x - 2.0) * l1m / ((x - 2.0) * (x - 1.0) * x)
        }
        14 => {
            (li2(x + x * x - x * x * x) - li2(x)) / ((1.0 - x) * (1.0 - x))
                + ((2.0 * x * x - x - 1.0) * x.ln_1p() + (3.0 * x * x - x - 1.0) * l1m)
                    / ((x - 1.0) * x * (x * x - x - 1.0))
        }
        k => {
            return Err(Error::domain(format!(
                "S{k} has no closed form beyond the diagonal of its parent"
            )))
        }
    };
    finite(v, &format!("S{}", s.get()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    NoReference,
}

/// A secondary target a partial sum is compared against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub label: String,
    pub value: f64,
    pub abs_diff: f64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumResult {
    pub name: String,
    pub partial_sum: f64,
    pub terms_used: u64,
    pub tail_estimate: f64,
    pub closed_form_value: Option<f64>,
    pub abs_diff: Option<f64>,
    pub tolerance: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<f64>,
}

impl SumResult {
    fn new(name: impl Into<String>, partial: f64, terms: u64, tail: f64, target: Option<f64>, tol: f64) -> Self {
        let abs_diff = target.map(|t| (partial - t).abs());
        let verdict = match abs_diff {
            None => Verdict::NoReference,
            Some(d) if d <= tol => Verdict::Match,
            Some(_) => Verdict::Mismatch,
        };
        SumResult {
            name: name.into(),
            partial_sum: partial,
            terms_used: terms,
            tail_estimate: tail,
            closed_form_value: target,
            abs_diff,
            tolerance: tol,
            verdict,
            comparisons: Vec::new(),
            trace: Vec::new(),
        }
    }

    fn compare(&mut self, label: impl Into<String>, value: f64) {
        self.compare_within(label, value, self.tolerance);
    }

    fn compare_within(&mut self, label: impl Into<String>, value: f64, tolerance: f64) {
        let abs_diff = (self.partial_sum - value).abs();
        self.comparisons.push(Comparison {
            label: label.into(),
            value,
            abs_diff,
            matches: abs_diff <= tolerance,
        });
    }
}

/// `sum_n 2^-n sum_m 1/binom(n, m)` against `8/3 + (8/9) ln 2`.
///
/// Row sums are bounded by `n + 1`, so the tail after `terms` rows is at most
/// `sum_{n>T} (n+1) 2^-n = (T+3) 2^-T`.
pub fn row_sum_weighted_check(terms: u64, tol: f64) -> Result<SumResult> {
    if terms == 0 {
        return Err(Error::domain("row_sum_weighted_check needs terms >= 1"));
    }
    let mut sum = Neumaier::default();
    let mut weight = 1.0;
    for n in 0..=terms as i64 {
        let row: rational::Rational = (0..=n).map(|m| recip_binom(n, m)).sum();
        sum.add(weight * rational::to_f64(&row));
        weight *= 0.5;
    }
    let t = terms as f64;
    let tail = (t + 3.0) * 0.5f64.powf(t);
    let target = 8.0 / 3.0 + 8.0 / 9.0 * LN_2;
    Ok(SumResult::new("row-weighted", sum.total(), terms, tail, Some(target), tol))
}

/// `sum_{1<=m<=n<=T} 2^-(n+m) / (n m binom(n-1, m-1))`.
fn j_half_half(terms: u64) -> f64 {
    let mut sum = Neumaier::default();
    let mut xn = 1.0;
    for n in 1..=terms {
        xn *= 0.5;
        // r = 1 / binom(n-1, m-1), updated along the row
        let mut r = 1.0;
        let mut ym = 1.0;
        for m in 1..=n {
            ym *= 0.5;
            sum.add(xn * ym * r / (n * m) as f64);
            r *= m as f64 / (n - m) as f64;
        }
    }
    sum.total()
}

/// `sum_{n<=T, 1<=m<=n+1} 2^-(n+m) / (m binom(n, m-1))`.
fn k_half_half(terms: u64) -> f64 {
    let mut sum = Neumaier::default();
    let mut xn = 1.0;
    for n in 0..=terms {
        let mut r = 1.0;
        let mut ym = 1.0;
        for m in 1..=n + 1 {
            ym *= 0.5;
            sum.add(xn * ym * r / m as f64);
            if m <= n {
                r *= m as f64 / (n + 1 - m) as f64;
            }
        }
        xn *= 0.5;
    }
    sum.total()
}

/// Direct double sum `J(1/2, 1/2)`.
///
/// The primary target is the closed form of `J` at `x = y = 1/2`, i.e.
/// `2 Li2(5/8) - 2 Li2(1/2)`; the printed value `ln^2 2 + Li2(5/4) - pi^2/6`
/// (real part) is recorded as a comparison. Each weighted row is at most
/// `2^-n`, so the tail is at most `2^-T`.
pub fn example_j_check(terms: u64, tol: f64) -> Result<SumResult> {
    if terms < 1 {
        return Err(Error::domain("example_J_check needs terms >= 1"));
    }
    let partial = j_half_half(terms);
    let substituted = 2.0 * li2(0.625) - 2.0 * li2(0.5);
    let tail = 0.5f64.powi(terms as i32);
    let mut r = SumResult::new("example-J", partial, terms, tail, Some(substituted), tol);
    r.compare("closed form of J at (1/2, 1/2)", eval_j(0.5, 0.5)?);
    let li = dilog(1.25);
    r.compare(
        format!(
            "printed ln^2 2 + Li2(5/4) - pi^2/6{}",
            if li.branch_extended { " (real part)" } else { "" }
        ),
        LN_2 * LN_2 + li.value - PI * PI / 6.0,
    );
    Ok(r)
}

/// Direct double sum `K(1/2, 1/2)` against the printed
/// `-16 ln 3 / 5 + 2 ln^2 2 + 28 ln 2 / 5 + 4 Li2(5/8) - pi^2/3`.
pub fn example_k_check(terms: u64, tol: f64) -> Result<SumResult> {
    let partial = k_half_half(terms);
    let printed = -16.0 * 3f64.ln() / 5.0 + 2.0 * LN_2 * LN_2 + 28.0 * LN_2 / 5.0 + 4.0 * li2(0.625)
        - PI * PI / 3.0;
    let tail = 0.5f64.powi(terms as i32);
    let mut r = SumResult::new("example-K", partial, terms, tail, Some(printed), tol);
    r.compare("closed form of K at (1/2, 1/2)", eval_k(0.5, 0.5)?);
    Ok(r)
}

/// `1/binom(n, m) = prod_{i=1}^m i / (n - m + i)`.
fn recip_binom_f64(n: u64, m: u64) -> f64 {
    (1..=m).fold(1.0, |acc, i| acc * i as f64 / (n - m + i) as f64)
}

fn factorial_f64(m: u64) -> f64 {
    (1..=m).fold(1.0, |acc, i| acc * i as f64)
}

fn require_column(m: u64, what: &str) -> Result<()> {
    if m < 2 {
        return Err(Error::DivergentSeries(format!(
            "{what} needs m >= 2 (got m = {m})"
        )));
    }
    Ok(())
}

/// Partial sums of column `m` of `1/binom(n, m)`, `n = m .. m + terms - 1`,
/// against `m/(m-1)`.
///
/// Tail majorant: `1/binom(n, m) <= m! / (n - m + 1)^m`, so the remainder after
/// `N = m + terms - 1` is at most `m! / ((m-1) (N - m + 1)^(m-1))`.
pub fn column_sum_check(m: u64, terms: u64, tol: f64) -> Result<SumResult> {
    require_column(m, "column sum of A")?;
    let (partial, _) = column_partial(m, terms, false);
    let last = m + terms - 1;
    let tail = factorial_f64(m) / ((m - 1) as f64 * ((last - m + 1) as f64).powi(m as i32 - 1));
    let target = m as f64 / (m - 1) as f64;
    Ok(SumResult::new(format!("col-A(m={m})"), partial, terms, tail, Some(target), tol))
}

/// Running partial sums of a column, optionally every one of them.
pub fn column_partial(m: u64, terms: u64, keep: bool) -> (f64, Vec<f64>) {
    let mut sum = Neumaier::default();
    let mut trace = Vec::new();
    for n in m..m + terms {
        sum.add(recip_binom_f64(n, m));
        if keep {
            trace.push(sum.total());
        }
    }
    (sum.total(), trace)
}

/// Partial sums of `1/(n binom(n-1, m))`, `n = m+1 .. m + terms`, against
/// `1/m`. Tail majorant `(m-1)! / (N - m)^m` with `N = m + terms`.
///
/// `m = 1` converges as well, but it lies outside the supported range.
pub fn column_sum_i_check(m: u64, terms: u64, tol: f64) -> Result<SumResult> {
    if m == 0 {
        return Err(Error::DivergentSeries("column sum of I diverges at m = 0".to_string()));
    }
    if m == 1 {
        return Err(Error::domain("column sum of I is supported for m >= 2"));
    }
    let mut sum = Neumaier::default();
    for n in m + 1..=m + terms {
        sum.add(recip_binom_f64(n - 1, m) / n as f64);
    }
    let last = m + terms;
    let tail = factorial_f64(m - 1) / ((last - m) as f64).powi(m as i32);
    Ok(SumResult::new(format!("col-I(m={m})"), sum.total(), terms, tail, Some(1.0 / m as f64), tol))
}

/// Partial sums of `1/binom(2n, m)` over `2n >= m`, `terms` rows. No closed
/// value exists for the limit; at `m = 2` the sum is `2 ln 2`, which is
/// attached as an internal comparison. Tail majorant
/// `m! / (2 (m-1) (2N - m + 1)^(m-1))`.
pub fn even_rows_column_sum(m: u64, terms: u64, tol: f64) -> Result<SumResult> {
    require_column(m, "column sum of even rows")?;
    let first = m.div_ceil(2);
    let mut sum = Neumaier::default();
    for n in first..first + terms {
        sum.add(recip_binom_f64(2 * n, m));
    }
    let last = first + terms - 1;
    let tail = factorial_f64(m) / (2.0 * (m - 1) as f64 * ((2 * last - m + 1) as f64).powi(m as i32 - 1));
    let mut r = SumResult::new(format!("col-even-rows(m={m})"), sum.total(), terms, tail, None, tol);
    if m == 2 {
        r.compare_within("2 ln 2 (within tol + tail)", 2.0 * LN_2, tol + tail);
    }
    Ok(r)
}

/// `d^2 A / dy^2` from the closed form, differentiated by hand.
pub fn a_yy(x: f64, y: f64) -> Result<f64> {
    DomainGuard::new(x, y).check()?;
    let c = 1.0 - x;
    let d = 1.0 + c * y;
    let w = 1.0 - x * y;
    // T = -y L / D^2, L = log(1-x) + log(1-xy)
    let l = (-x).ln_1p() + (-x * y).ln_1p();
    let l1 = -x / w;
    let l2 = -x * x / (w * w);
    let (p, p1, p2) = (y * l, l + y * l1, 2.0 * l1 + y * l2);
    let (q, q1, q2) = (d.powi(-2), -2.0 * c * d.powi(-3), 6.0 * c * c * d.powi(-4));
    let t2 = -(p2 * q + 2.0 * p1 * q1 + p * q2);
    // R = x y^2 U V, U = 1/(1-xy), V = 1/D
    let (f, f1, f2) = (y * y, 2.0 * y, 2.0);
    let u = 1.0 / w;
    let (u1, u2) = (x * u * u, 2.0 * x * x * u * u * u);
    let v = 1.0 / d;
    let (v1, v2) = (-c * v * v, 2.0 * c * c * v * v * v);
    let r2 = x * (f2 * u * v + f * u2 * v + f * u * v2 + 2.0 * (f1 * u1 * v + f1 * u * v1 + f * u1 * v1));
    finite(t2 + r2, "d^2A/dy^2")
}

/// `(-y^2 + 3y - 4) / (y - 1)^3`
pub fn abel_target(y: f64) -> f64 {
    (-y * y + 3.0 * y - 4.0) / (y - 1.0).powi(3)
}

/// Abel limit of `d^2 A / dy^2` as `x -> 1`, sampled at `x = 1 - 10^-k`,
/// `k = 2..=k_max`, with one Richardson step per consecutive pair. The trace
/// holds the extrapolants; the partial sum is the last one and the tail
/// estimate the gap between the last two.
pub fn abel_limit_check(y: f64, k_max: u32, tol: f64) -> Result<SumResult> {
    if y.abs() >= 1.0 {
        return Err(Error::domain(format!("abel limit needs |y| < 1, got {y}")));
    }
    if !(3..=12).contains(&k_max) {
        return Err(Error::domain("abel limit needs 3 <= k_max <= 12"));
    }
    let samples: Vec<f64> = (2..=k_max)
        .map(|k| a_yy(1.0 - 10f64.powi(-(k as i32)), y))
        .collect::<Result<_>>()?;
    let extrapolants: Vec<f64> = samples.windows(2).map(|w| (10.0 * w[1] - w[0]) / 9.0).collect();
    let last = *extrapolants.last().expect("k_max >= 3");
    let gap = match extrapolants.len() {
        0 | 1 => (samples[samples.len() - 1] - samples[samples.len() - 2]).abs(),
        n => (extrapolants[n - 1] - extrapolants[n - 2]).abs(),
    };
    let mut r = SumResult::new(format!("abel(y={y})"), last, k_max as u64, gap, Some(abel_target(y)), tol);
    r.trace = extrapolants;
    if y == 0.0 {
        let col = column_sum_check(2, 1_000_000, tol)?;
        r.compare("2 * column sum m = 2 (10^6 terms)", 2.0 * col.partial_sum);
    }
    Ok(r)
}
