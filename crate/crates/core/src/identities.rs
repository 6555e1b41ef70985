//! Exact identity checks and the report type shared by every check.
//!
//! Each check evaluates its two sides by separate code paths (factorial
//! oracle sums against series expansions, or two unrelated summation
//! formulas) and records the first counterexample instead of stopping.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::closed_forms::{self, ClosedFormId, Expansion};
use crate::error::{Error, Result};
use crate::rational::{self, binom, int, ratio, Rational};
use crate::series::Series2;
use crate::triangles::{
    binom_q, fibonacci, harmonic, recip_binom, sign, table_entry, Family, TableRow, TriangleVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PassWithVariant,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }
}

/// One side of a comparison; exact values serialize as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Exact(q) => s.serialize_str(&rational::render(q)),
            Value::Approx(v) => s.serialize_f64(*v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub range: String,
    pub status: Status,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Accumulates comparisons, keeping only the first mismatch.
#[derive(Debug)]
pub struct Checker {
    id: String,
    range: String,
    cases: u64,
    first_failure: Option<Failure>,
}

impl Checker {
    pub fn new(id: impl Into<String>, range: impl Into<String>) -> Self {
        Checker {
            id: id.into(),
            range: range.into(),
            cases: 0,
            first_failure: None,
        }
    }

    pub fn compare(&mut self, n: i64, m: Option<i64>, lhs: Rational, rhs: Rational) -> bool {
        self.cases += 1;
        let ok = lhs == rhs;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                n,
                m,
                lhs: Value::Exact(lhs),
                rhs: Value::Exact(rhs),
            });
        }
        ok
    }

    pub fn compare_f64(&mut self, n: i64, m: Option<i64>, lhs: f64, rhs: f64, tol: f64) -> bool {
        self.cases += 1;
        let ok = (lhs - rhs).abs() <= tol;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                n,
                m,
                lhs: Value::Approx(lhs),
                rhs: Value::Approx(rhs),
            });
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn finish(self) -> CheckReport {
        let status = if self.first_failure.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport {
            id: self.id,
            range: self.range,
            status,
            cases: self.cases,
            first_failure: self.first_failure,
            variant: None,
            note: None,
        }
    }
}

/// `(1/n) sum_{m<n} 1/binom(n-1, m) = H_n - sum_{k=1}^{n-1} H_{n-k} / 2^k`
pub fn check_iden7(max_n: i64) -> CheckReport {
    let mut c = Checker::new("iden7", format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        let lhs: Rational = (0..n).map(|m| recip_binom(n - 1, m)).sum::<Rational>() / int(n);
        let mut rhs = harmonic(n as u64);
        let mut half_pow = Rational::one();
        for k in 1..n {
            half_pow /= int(2);
            rhs -= harmonic((n - k) as u64) * &half_pow;
        }
        c.compare(n, None, lhs, rhs);
    }
    c.finish()
}

/// `sum_m 1/((n-m) binom(n-m-1, m)) = sum_{i=1}^n F_i ((-1)^n + 2(-1)^(i-1)) / (n-i+1)`
pub fn check_iden6(max_n: i64) -> CheckReport {
    let mut c = Checker::new("iden6", format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        let lhs: Rational = (0..n)
            .filter(|&m| m < n - m)
            .map(|m| rational::recip_or_zero(&(binom(n - m - 1, m) * (n - m))))
            .sum();
        let rhs: Rational = (1..=n)
            .map(|i| {
                let weight = sign(n) + sign(i - 1) * int(2);
                rational::big(fibonacci(i as u64)) * weight / int(n - i + 1)
            })
            .sum();
        c.compare(n, None, lhs, rhs);
    }
    c.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iden5Variant {
    /// The alternating sum indexed by `n`, as displayed.
    Printed,
    /// The same sum indexed by `n - 1`.
    Shifted,
    /// Printed if it holds, otherwise shifted (reported as a variant).
    Auto,
}

impl std::str::FromStr for Iden5Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Iden5Variant::Printed),
            "shifted" => Ok(Iden5Variant::Shifted),
            "auto" => Ok(Iden5Variant::Auto),
            _ => Err(Error::Parse {
                what: "iden5 variant",
                input: s.to_string(),
            }),
        }
    }
}

/// `sum_{k=0}^{r} (-1)^(r-k) binom(k, m) binom(m, r-k) / (k+1)`
fn iden5_rhs(r: i64, m: i64) -> Rational {
    (0..=r)
        .map(|k| sign(r - k) * binom_q(k, m) * binom_q(m, r - k) / int(k + 1))
        .sum()
}

fn iden5_single(max_n: i64, shifted: bool) -> CheckReport {
    let mut c = Checker::new("iden5", format!("0 <= m < n <= {max_n}"));
    for n in 1..=max_n {
        for m in 0..n {
            let lhs = rational::recip_or_zero(&(binom(n - 1, m) * n));
            let rhs = iden5_rhs(if shifted { n - 1 } else { n }, m);
            c.compare(n, Some(m), lhs, rhs);
        }
    }
    let mut report = c.finish();
    report.variant = Some(if shifted { "shifted" } else { "printed" }.to_string());
    report
}

/// `1/(n binom(n-1, m))` against the alternating binomial sum.
pub fn check_iden5(max_n: i64, variant: Iden5Variant) -> CheckReport {
    match variant {
        Iden5Variant::Printed => iden5_single(max_n, false),
        Iden5Variant::Shifted => iden5_single(max_n, true),
        Iden5Variant::Auto => {
            let printed = iden5_single(max_n, false);
            if printed.status == Status::Pass {
                return printed;
            }
            let mut shifted = iden5_single(max_n, true);
            if shifted.status == Status::Pass {
                shifted.status = Status::PassWithVariant;
                shifted.first_failure = printed.first_failure.clone();
                shifted.note = Some(match &printed.first_failure {
                    Some(f) => format!(
                        "printed indexing fails first at (n, m) = ({}, {}); shifted indexing holds",
                        f.n,
                        f.m.unwrap_or(0)
                    ),
                    None => "printed indexing fails; shifted indexing holds".to_string(),
                });
                shifted
            } else {
                printed
            }
        }
    }
}

/// `(1/m^2) (1/binom(n, m) - 1/binom(n-1, m)) = sum_{k=1}^n (-1)^(n-k) binom(k, m) binom(m, n-k) / k^2`.
/// The second reciprocal is dropped at `m = n`, as in the coefficient form
/// `[x^n y^m] (1 - x) J`.
pub fn check_iden_diff(max_n: i64) -> CheckReport {
    let mut c = Checker::new("iden_diff", format!("1 <= m <= n <= {max_n}"));
    for n in 1..=max_n {
        for m in 1..=n {
            let lhs = (recip_binom(n, m) - recip_binom(n - 1, m)) / int(m * m);
            let rhs: Rational = (1..=n)
                .map(|k| sign(n - k) * binom_q(k, m) * binom_q(m, n - k) / int(k * k))
                .sum();
            c.compare(n, Some(m), lhs, rhs);
        }
    }
    let mut report = c.finish();
    report.note = Some("m = n reads 1/binom(n-1, n) as 0".to_string());
    report
}

/// Value taken by `binom(-1, 0)` in the Pascal reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PascalBoundary {
    One,
    Zero,
}

impl PascalBoundary {
    fn tag(self) -> &'static str {
        match self {
            PascalBoundary::One => "binom(-1,0) = 1",
            PascalBoundary::Zero => "binom(-1,0) = 0",
        }
    }
}

/// `binom(n, m) = (n+1)/(m+1) sum_{k=0}^{n-m} binom(n-k-1, n-m-k) / binom(m+k+1, k)`
/// under one boundary convention.
pub fn check_iden_pascal_with(max_n: i64, boundary: PascalBoundary) -> CheckReport {
    let mut c = Checker::new("iden_pascal", format!("0 <= m <= n <= {max_n}"));
    for n in 0..=max_n {
        for m in 0..=n {
            let sum: Rational = (0..=n - m)
                .map(|k| {
                    let (a, b) = (n - k - 1, n - m - k);
                    let top = if a == -1 && b == 0 && boundary == PascalBoundary::Zero {
                        Rational::zero()
                    } else {
                        binom_q(a, b)
                    };
                    top / binom_q(m + k + 1, k)
                })
                .sum();
            c.compare(n, Some(m), sum * ratio(n + 1, m + 1), binom_q(n, m));
        }
    }
    let mut report = c.finish();
    report.variant = Some(boundary.tag().to_string());
    report
}

/// Runs both boundary conventions; passes when exactly one reproduces
/// Pascal's triangle and names it.
pub fn check_iden_pascal(max_n: i64) -> CheckReport {
    let one = check_iden_pascal_with(max_n, PascalBoundary::One);
    let zero = check_iden_pascal_with(max_n, PascalBoundary::Zero);
    let describe = |r: &CheckReport| match (&r.first_failure, r.status) {
        (_, Status::Pass) => format!("{} holds", r.variant.as_deref().unwrap_or("")),
        (Some(f), _) => format!(
            "{} fails first at (n, m) = ({}, {})",
            r.variant.as_deref().unwrap_or(""),
            f.n,
            f.m.unwrap_or(0)
        ),
        (None, _) => format!("{} fails", r.variant.as_deref().unwrap_or("")),
    };
    let note = format!("{}; {}", describe(&one), describe(&zero));
    let mut report = match (one.status, zero.status) {
        (Status::Pass, Status::Fail) => one,
        (Status::Fail, Status::Pass) => zero,
        _ => {
            let mut r = one;
            r.status = Status::Fail;
            r
        }
    };
    report.note = Some(note);
    report
}

/// `(1/m^2) sum_{k=0}^n binom(n-k-1, n-m-k) / binom(k+m, m) = sum_{k=0}^{n-m} binom(k+m, m) / (k+m)^2`
pub fn check_iden_li(max_n: i64) -> CheckReport {
    let mut c = Checker::new("iden_li", format!("1 <= m <= n <= {max_n}"));
    for n in 1..=max_n {
        for m in 1..=n {
            let lhs: Rational = (0..=n)
                .map(|k| binom_q(n - k - 1, n - m - k) / binom_q(k + m, m))
                .sum::<Rational>()
                / int(m * m);
            let rhs: Rational = (0..=n - m)
                .map(|k| binom_q(k + m, m) / int((k + m) * (k + m)))
                .sum();
            c.compare(n, Some(m), lhs, rhs);
        }
    }
    c.finish()
}

/// `[x^n]` of the sum generating function `id`, summed directly from the
/// factorial oracle.
pub fn direct_sum(id: &ClosedFormId, n: i64) -> Result<Rational> {
    Ok(match id {
        ClosedFormId::Sum(s) => {
            let v = s.source();
            if s.is_diagonal() {
                (0..=n).map(|m| table_entry(v, n - m, m)).sum()
            } else {
                (0..=2 * n + 2).map(|m| table_entry(v, n, m)).sum()
            }
        }
        ClosedFormId::ARow { a, b } => (0..=n)
            .map(|m| rational::pow(a, (n - m) as usize) * rational::pow(b, m as usize) * recip_binom(n, m))
            .sum(),
        ClosedFormId::ADiag => (0..=n).map(|m| recip_binom(n - m, m)).sum(),
        other => return Err(Error::domain(format!("{other} is not a sum generating function"))),
    })
}

fn compare_series(id: &str, series: &crate::Series1, max_n: usize, oracle: &[Rational]) -> Checker {
    let mut c = Checker::new(id, format!("0 <= n <= {max_n}"));
    for (n, expect) in oracle.iter().enumerate().take(max_n + 1) {
        c.compare(n as i64, None, series.coeff(n).clone(), expect.clone());
    }
    c
}

/// Closed-form expansion of a sum generating function against the direct
/// sums, with the definitional route (substitution into the parent
/// bivariate expansion) as a second witness.
pub fn check_sum_gf(id: &ClosedFormId, max_n: usize) -> Result<CheckReport> {
    let name = id.to_string();
    let oracle: Vec<Rational> = (0..=max_n as i64).map(|n| direct_sum(id, n)).collect::<Result<_>>()?;
    let printed = closed_forms::expand(id, max_n)?
        .univariate()
        .ok_or_else(|| Error::domain(format!("{name} is not univariate")))?;
    let definitional = closed_forms::definitional(id, max_n)?;

    let def_check = compare_series(&name, &definitional, max_n, &oracle);
    if !def_check.passed() {
        let mut r = def_check.finish();
        r.note = Some("definitional expansion disagrees with the direct sums".to_string());
        return Ok(r);
    }

    let mut report = compare_series(&name, &printed, max_n, &oracle).finish();
    if let ClosedFormId::Sum(s) = id {
        if s.is_diagonal() && s.get() <= 8 {
            report.note = Some(format!("diagonal of {}", s.source()));
            return Ok(report);
        }
    }
    if report.status == Status::Fail {
        if let Some((tag, fixed)) = closed_forms::corrected(id, max_n) {
            let fixed = fixed?;
            if compare_series(&name, &fixed, max_n, &oracle).passed() {
                report.status = Status::PassWithVariant;
                report.variant = Some(tag.to_string());
                report.note = Some("printed closed form does not match; corrected form does".to_string());
            }
        }
    }
    Ok(report)
}

/// Expansion of a table cell against the factorial oracle on `0..=max_n`.
pub fn check_table_grid(v: TriangleVariant, max_n: usize) -> Result<CheckReport> {
    let grid = closed_forms::expand(&ClosedFormId::Triangle(v), max_n)?
        .bivariate()
        .expect("triangle ids expand bivariately");
    Ok(compare_grid(&format!("grid_{v}"), &grid, max_n, |n, m| table_entry(v, n, m)))
}

fn compare_grid(id: &str, grid: &Series2, max_n: usize, oracle: impl Fn(i64, i64) -> Rational) -> CheckReport {
    let mut c = Checker::new(id, format!("0 <= n, m <= {max_n}"));
    for n in 0..=max_n {
        for m in 0..=max_n {
            c.compare(n as i64, Some(m as i64), grid.coeff(n, m).clone(), oracle(n as i64, m as i64));
        }
    }
    c.finish()
}

/// `I`, `J` and `K` as integration/differentiation chains of `A`:
/// `I = int_x A`, `J = int_y I`, `K = d/dx J`, each against both the closed-form
/// expansion and the table oracle.
pub fn check_integral_chain(max_n: usize) -> Result<Vec<CheckReport>> {
    let a = match closed_forms::expand(&ClosedFormId::Triangle(base(Family::A)), max_n + 1)? {
        Expansion::Bivariate(s) => s,
        Expansion::Univariate(_) => unreachable!("A is bivariate"),
    };
    let i = a.integrate_x();
    let j = i.integrate_y();
    let k = j.differentiate_x()?;
    let mut reports = Vec::new();
    for (family, chain) in [(Family::I, i), (Family::J, j), (Family::K, k)] {
        let v = base(family);
        let closed = closed_forms::expand(&ClosedFormId::Triangle(v), max_n)?
            .bivariate()
            .expect("bivariate");
        let mut c = Checker::new(format!("chain_{v}"), format!("0 <= n, m <= {max_n}"));
        for n in 0..=max_n {
            for m in 0..=max_n {
                let oracle = table_entry(v, n as i64, m as i64);
                c.compare(n as i64, Some(m as i64), chain.coeff(n, m).clone(), oracle.clone());
                c.compare(n as i64, Some(m as i64), closed.coeff(n, m).clone(), oracle);
            }
        }
        reports.push(c.finish());
    }
    Ok(reports)
}

fn base(family: Family) -> TriangleVariant {
    TriangleVariant::new(family, TableRow::Base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::SumId;

    #[test]
    fn iden7_and_iden6() {
        assert_eq!(check_iden7(12).status, Status::Pass);
        assert_eq!(check_iden6(12).status, Status::Pass);
    }

    #[test]
    fn iden5_counterexample() {
        let r = check_iden5(5, Iden5Variant::Printed);
        assert_eq!(r.status, Status::Fail);
        let f = r.first_failure.unwrap();
        assert_eq!((f.n, f.m), (1, Some(0)));
        assert_eq!(f.lhs, Value::Exact(int(1)));
        assert_eq!(f.rhs, Value::Exact(ratio(1, 2)));
        assert_eq!(check_iden5(10, Iden5Variant::Shifted).status, Status::Pass);
        let auto = check_iden5(6, Iden5Variant::Auto);
        assert_eq!(auto.status, Status::PassWithVariant);
        assert_eq!(auto.variant.as_deref(), Some("shifted"));
    }

    #[test]
    fn iden_diff_li_pascal() {
        assert_eq!(check_iden_diff(10).status, Status::Pass);
        assert_eq!(check_iden_li(10).status, Status::Pass);
        let one = check_iden_pascal_with(8, PascalBoundary::One);
        let zero = check_iden_pascal_with(8, PascalBoundary::Zero);
        assert_eq!(one.status, Status::Pass);
        assert_eq!(zero.status, Status::Fail);
        let combined = check_iden_pascal(8);
        assert_eq!(combined.status, Status::Pass);
        assert_eq!(combined.variant.as_deref(), Some("binom(-1,0) = 1"));
    }

    #[test]
    fn direct_sums() {
        let s9 = ClosedFormId::Sum(SumId::new(9).unwrap());
        assert_eq!(direct_sum(&s9, 2).unwrap(), int(1));
        let diag: Vec<Rational> = (0..4).map(|n| direct_sum(&ClosedFormId::ADiag, n).unwrap()).collect();
        assert_eq!(diag, vec![int(1), int(1), int(2), ratio(3, 2)]);
        let s1 = ClosedFormId::Sum(SumId::new(1).unwrap());
        assert_eq!(direct_sum(&s1, 0).unwrap(), int(1));
    }

    #[test]
    fn sum_gf_statuses() {
        let s = |k| ClosedFormId::Sum(SumId::new(k).unwrap());
        assert_eq!(check_sum_gf(&s(11), 10).unwrap().status, Status::Pass);
        let s9 = check_sum_gf(&s(9), 10).unwrap();
        assert_eq!(s9.status, Status::PassWithVariant);
        assert_eq!(check_sum_gf(&s(7), 8).unwrap().status, Status::PassWithVariant);
        assert_eq!(check_sum_gf(&s(4), 8).unwrap().status, Status::Pass);
    }

    #[test]
    fn report_serialization() {
        let r = check_iden5(2, Iden5Variant::Printed);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"fail\""));
        assert!(json.contains("\"rhs\":\"1/2\""));
    }
}
