//! Check-suite orchestration and the JSON report document.

use serde::Serialize;

use crate::closed_forms::{self, ClosedFormId, SumId};
use crate::error::{Error, Result};
use crate::identities::{self, CheckReport, Iden5Variant, Status};
use crate::numeric::{self, SumResult, Verdict};
use crate::rational::ratio;
use crate::riordan;
use crate::triangles::TriangleVariant;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverallStatus {
    AllPass,
    HasFailures,
    HasNoReference,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportConfig {
    pub max_n: usize,
    pub tol: f64,
    pub iden5_variant: String,
    pub ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub config: ReportConfig,
    pub checks: Vec<CheckReport>,
    pub sums: Vec<SumResult>,
    pub status: OverallStatus,
}

impl ReportDocument {
    pub fn new(config: ReportConfig, checks: Vec<CheckReport>, sums: Vec<SumResult>) -> Self {
        let status = overall(&checks, &sums);
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            config,
            checks,
            sums,
            status,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn overall(checks: &[CheckReport], sums: &[SumResult]) -> OverallStatus {
    if checks.iter().any(|c| c.status == Status::Fail) || sums.iter().any(|s| s.verdict == Verdict::Mismatch) {
        OverallStatus::HasFailures
    } else if sums.iter().any(|s| s.verdict == Verdict::NoReference) {
        OverallStatus::HasNoReference
    } else {
        OverallStatus::AllPass
    }
}

/// Every check id understood by [`run_check`], in report order.
pub fn suite_ids() -> Vec<String> {
    let mut ids: Vec<String> = [
        "iden7",
        "iden6",
        "iden5",
        "iden_diff",
        "iden_pascal",
        "iden_li",
        "prudnikov",
        "reconstruct_A",
        "chain",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    ids.extend(TriangleVariant::all().map(|v| format!("grid_{v}")));
    ids.extend(SumId::all().map(|s| format!("S{}", s.get())));
    ids.extend(["A_row", "A_diag", "F_xy", "A1_display"].iter().map(|s| s.to_string()));
    ids
}

/// Runs one check id (`chain` yields three reports).
pub fn run_check(id: &str, max_n: usize, variant: Iden5Variant, tol: f64) -> Result<Vec<CheckReport>> {
    let n = max_n as i64;
    let one = |r: CheckReport| Ok(vec![r]);
    match id {
        "iden7" => one(identities::check_iden7(n)),
        "iden6" => one(identities::check_iden6(n)),
        "iden5" => one(identities::check_iden5(n, variant)),
        "iden_diff" => one(identities::check_iden_diff(n)),
        "iden_pascal" => one(identities::check_iden_pascal(n)),
        "iden_li" => one(identities::check_iden_li(n)),
        "prudnikov" => one(riordan::prudnikov_check_range(2 * n)),
        "reconstruct_A" => one(riordan::reconstruct_a_check(max_n)?),
        "chain" => identities::check_integral_chain(max_n),
        "F_xy" => one(closed_forms::f_xy_check(&f_xy_points(), tol)?),
        "A1_display" => one(closed_forms::a1_display_check(&a1_points(), tol)?),
        _ => {
            if let Some(v) = id.strip_prefix("grid_") {
                let parsed: ClosedFormId = v.parse()?;
                let ClosedFormId::Triangle(v) = parsed else {
                    return Err(unknown(id));
                };
                return one(identities::check_table_grid(v, max_n)?);
            }
            match id.parse::<ClosedFormId>() {
                Ok(cf @ (ClosedFormId::Sum(_) | ClosedFormId::ARow { .. } | ClosedFormId::ADiag)) => {
                    one(identities::check_sum_gf(&cf, max_n)?)
                }
                _ => Err(unknown(id)),
            }
        }
    }
}

fn unknown(id: &str) -> Error {
    Error::Parse {
        what: "check id",
        input: id.to_string(),
    }
}

fn f_xy_points() -> Vec<(crate::Rational, crate::Rational)> {
    vec![
        (ratio(1, 2), ratio(1, 3)),
        (ratio(1, 10), ratio(1, 4)),
        (ratio(-1, 2), ratio(1, 5)),
        (ratio(3, 5), ratio(-2, 5)),
    ]
}

fn a1_points() -> Vec<(f64, f64)> {
    vec![(0.25, 0.5), (0.1, 1.0), (0.5, -0.3), (0.36, 0.2)]
}

/// Terms used for the column-sum checks: enough that the tail majorant stays
/// far above double rounding.
pub fn column_terms(m: u64) -> u64 {
    match m {
        0..=2 => 1_000_000,
        3 => 10_000,
        4 | 5 => 1_000,
        _ => 200,
    }
}

/// The numeric part of the report.
pub fn run_sums(tol: f64) -> Result<Vec<SumResult>> {
    let mut sums = vec![
        numeric::row_sum_weighted_check(60, tol.min(1e-12))?,
        numeric::example_j_check(200, tol.min(1e-10))?,
        numeric::example_k_check(200, tol)?,
    ];
    for m in 2..=8 {
        let terms = column_terms(m);
        let mut r = numeric::column_sum_check(m, terms, tol)?;
        widen_to_tail(&mut r, tol);
        sums.push(r);
    }
    for m in 2..=8 {
        let mut r = numeric::column_sum_i_check(m, column_terms(m), tol)?;
        widen_to_tail(&mut r, tol);
        sums.push(r);
    }
    for m in 2..=4 {
        sums.push(numeric::even_rows_column_sum(m, 10_000, tol)?);
    }
    for y in [0.5, 0.0, -0.5] {
        sums.push(numeric::abel_limit_check(y, 8, ABEL_TOL)?);
    }
    Ok(sums)
}

/// Tolerance used for the Abel extrapolation unless one is given.
pub const ABEL_TOL: f64 = 1e-3;

/// Column sums are judged against `tol + 10 * tail`; the verdict is
/// recomputed with that tolerance.
pub fn widen_to_tail(r: &mut SumResult, tol: f64) {
    r.tolerance = tol + 10.0 * r.tail_estimate;
    if let Some(d) = r.abs_diff {
        r.verdict = if d <= r.tolerance { Verdict::Match } else { Verdict::Mismatch };
    }
}

/// The full report: every suite id at `max_n` plus the numeric sums.
pub fn build_report(max_n: usize, tol: f64) -> Result<ReportDocument> {
    let variant = Iden5Variant::Auto;
    let ids = suite_ids();
    let mut checks = Vec::new();
    for id in &ids {
        checks.extend(run_check(id, max_n, variant, tol)?);
    }
    let sums = run_sums(tol)?;
    let config = ReportConfig {
        max_n,
        tol,
        iden5_variant: "auto".to_string(),
        ids,
    };
    Ok(ReportDocument::new(config, checks, sums))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_has_every_id() {
        let ids = suite_ids();
        assert!(ids.len() >= 20);
        assert!(ids.contains(&"grid_K4".to_string()));
        assert!(ids.contains(&"S14".to_string()));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(run_check("iden99", 4, Iden5Variant::Auto, 1e-9).is_err());
        assert!(run_check("grid_S3", 4, Iden5Variant::Auto, 1e-9).is_err());
    }

    #[test]
    fn small_checks_run() {
        for id in ["iden7", "grid_A3", "S9", "A_row", "chain"] {
            let reports = run_check(id, 6, Iden5Variant::Auto, 1e-9).unwrap();
            assert!(reports.iter().all(|r| r.status.is_pass()), "{id}: {reports:?}");
        }
    }

    #[test]
    fn overall_status_rules() {
        assert_eq!(overall(&[], &[]), OverallStatus::AllPass);
        let r = numeric::even_rows_column_sum(3, 10, 1e-9).unwrap();
        assert_eq!(overall(&[], &[r]), OverallStatus::HasNoReference);
    }
}
