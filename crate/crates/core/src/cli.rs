//! Command-line front end. [`run`] returns the process exit code:
//! 0 success, 1 check or sum failure, 2 usage or domain error, 3 I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::closed_forms::{self, ClosedFormId, Expansion};
use crate::error::{Error, Result};
use crate::identities::{Iden5Variant, Status};
use crate::numeric::{self, SumResult, Verdict};
use crate::rational::{self, Rational};
use crate::report::{self, ReportConfig, ReportDocument};
use crate::triangles::{self, Family, TableRow, TriangleVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest `--count` accepted by `export-oeis`.
pub const MAX_EXPORT_COUNT: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "recipbinom", version, about = "Generating functions for reciprocal binomial coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Printed,
    Shifted,
    Auto,
}

impl From<VariantArg> for Iden5Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Printed => Iden5Variant::Printed,
            VariantArg::Shifted => Iden5Variant::Shifted,
            VariantArg::Auto => Iden5Variant::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SumName {
    #[value(name = "col-A")]
    ColA,
    #[value(name = "col-I")]
    ColI,
    ColEvenRows,
    RowWeighted,
    #[value(name = "example-J")]
    ExampleJ,
    #[value(name = "example-K")]
    ExampleK,
    Abel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sequence {
    ExpTriangle,
    ExpRowSums,
    DiagFactorial,
    EvenRowSums,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a table cell as a triangle of exact rationals.
    Triangle {
        #[arg(long, default_value = "A")]
        col: String,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=4))]
        row: u8,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        offset: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity and expansion checks; writes a JSON report.
    Check {
        #[arg(long, default_value = "all", value_delimiter = ',')]
        ids: Vec<String>,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an infinite sum numerically.
    Sum {
        #[arg(long, value_enum)]
        name: SumName,
        #[arg(long, default_value_t = 2)]
        m: u64,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the exact expansion of a closed form.
    Series {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Use the corrected variant where one is registered.
        #[arg(long)]
        corrected: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a computed sequence in OEIS b-file format.
    ExportOeis {
        #[arg(long, value_enum)]
        sequence: Sequence,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        offset: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check and sum and write one JSON report.
    Report {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

fn dispatch(cmd: Command) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Triangle {
            col,
            row,
            max_n,
            format,
            offset,
            out,
        } => {
            let column: Family = col.parse()?;
            let row = TableRow::from_index(row)?;
            closed_forms::check_order(max_n)?;
            let text = render_triangle(TriangleVariant::new(column, row), max_n, format, offset);
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            ids,
            max_n,
            variant,
            tol,
            out,
        } => {
            let ids = expand_ids(ids);
            let mut checks = Vec::new();
            for id in &ids {
                checks.extend(report::run_check(id, max_n, variant.into(), tol)?);
            }
            for c in &checks {
                if c.status == Status::PassWithVariant {
                    eprintln!(
                        "warning: {} passes only with variant {}",
                        c.id,
                        c.variant.as_deref().unwrap_or("?")
                    );
                }
            }
            let failed = checks.iter().any(|c| c.status == Status::Fail);
            let config = ReportConfig {
                max_n,
                tol,
                iden5_variant: format!("{variant:?}").to_lowercase(),
                ids,
            };
            emit(out, &ReportDocument::new(config, checks, Vec::new()).to_json())?;
            Ok(if failed { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Sum {
            name,
            m,
            terms,
            y,
            k_max,
            tol,
            out,
        } => {
            let r = run_sum(name, m, terms, y, k_max, tol)?;
            emit(out, &(serde_json::to_string_pretty(&r).expect("serializes") + "\n"))?;
            Ok(if r.verdict == Verdict::Mismatch { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Series {
            id,
            order,
            corrected,
            format,
            out,
        } => {
            let id: ClosedFormId = id.parse()?;
            let expansion = if corrected {
                match closed_forms::corrected(&id, order) {
                    Some((_, s)) => Expansion::Univariate(s?),
                    None => return Err(Failure::Usage(format!("{id} has no corrected variant"))),
                }
            } else {
                closed_forms::expand(&id, order)?
            };
            emit(out, &render_expansion(&expansion, format))?;
            Ok(EXIT_OK)
        }
        Command::ExportOeis {
            sequence,
            count,
            offset,
            out,
        } => {
            if count > MAX_EXPORT_COUNT {
                return Err(Failure::Usage(format!("count {count} exceeds {MAX_EXPORT_COUNT}")));
            }
            let values = export_values(sequence, count);
            emit(out, &bfile(&values, offset))?;
            Ok(EXIT_OK)
        }
        Command::Report { max_n, tol, out } => {
            closed_forms::check_order(2 * max_n + 1)?;
            let doc = report::build_report(max_n, tol)?;
            emit(out, &doc.to_json())?;
            Ok(if doc.status == report::OverallStatus::HasFailures {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
    }
}

fn expand_ids(ids: Vec<String>) -> Vec<String> {
    if ids.iter().any(|i| i == "all") {
        return report::suite_ids();
    }
    ids.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn run_sum(name: SumName, m: u64, terms: Option<u64>, y: f64, k_max: u32, tol: Option<f64>) -> Result<SumResult> {
    let tol_or = |d: f64| tol.unwrap_or(d);
    match name {
        SumName::ColA => {
            let t = tol_or(1e-9);
            let mut r = numeric::column_sum_check(m, terms.unwrap_or_else(|| report::column_terms(m)), t)?;
            report::widen_to_tail(&mut r, t);
            Ok(r)
        }
        SumName::ColI => {
            let t = tol_or(1e-9);
            let mut r = numeric::column_sum_i_check(m, terms.unwrap_or_else(|| report::column_terms(m)), t)?;
            report::widen_to_tail(&mut r, t);
            Ok(r)
        }
        SumName::ColEvenRows => numeric::even_rows_column_sum(m, terms.unwrap_or(10_000), tol_or(1e-9)),
        SumName::RowWeighted => numeric::row_sum_weighted_check(terms.unwrap_or(60), tol_or(1e-12)),
        SumName::ExampleJ => numeric::example_j_check(terms.unwrap_or(200), tol_or(1e-10)),
        SumName::ExampleK => numeric::example_k_check(terms.unwrap_or(200), tol_or(1e-9)),
        SumName::Abel => numeric::abel_limit_check(y, k_max, tol_or(report::ABEL_TOL)),
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut f = File::create(path)?;
            f.write_all(text.as_bytes())?;
            f.flush()
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn row_values(v: TriangleVariant, n: i64) -> Vec<String> {
    triangles::row_cells(v, n)
        .iter()
        .map(|(_, c)| rational::render(c))
        .collect()
}

fn render_triangle(v: TriangleVariant, max_n: usize, format: Format, offset: i64) -> String {
    let rows: Vec<Vec<String>> = (0..=max_n as i64).map(|n| row_values(v, n)).collect();
    match format {
        Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
        Format::Json => serde_json::to_string(&rows).expect("serializes") + "\n",
        Format::Bfile => {
            let flat: Vec<String> = rows.into_iter().flatten().collect();
            bfile_strings(&flat, offset)
        }
    }
}

fn render_expansion(e: &Expansion, format: Format) -> String {
    match e {
        Expansion::Univariate(s) => {
            let vals: Vec<String> = s.coeffs().iter().map(rational::render).collect();
            match format {
                Format::Csv => vals.join(",") + "\n",
                Format::Json => serde_json::to_string(&vals).expect("serializes") + "\n",
                Format::Bfile => bfile_strings(&vals, 0),
            }
        }
        Expansion::Bivariate(s) => {
            let rows: Vec<Vec<String>> = (0..=s.order())
                .map(|n| s.row(n).iter().map(rational::render).collect())
                .collect();
            match format {
                Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
                Format::Json => serde_json::to_string(&rows).expect("serializes") + "\n",
                Format::Bfile => bfile_strings(&rows.into_iter().flatten().collect::<Vec<_>>(), 0),
            }
        }
    }
}

fn bfile_strings(values: &[String], offset: i64) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {}\n", offset + i as i64, v))
        .collect()
}

fn bfile(values: &[Rational], offset: i64) -> String {
    let strings: Vec<String> = values.iter().map(rational::render).collect();
    bfile_strings(&strings, offset)
}

/// The first `count` terms of an exported sequence.
pub fn export_values_by_name(name: &str, count: usize) -> Result<Vec<Rational>> {
    let seq = Sequence::from_str(name, false).map_err(|_| Error::Parse {
        what: "sequence",
        input: name.to_string(),
    })?;
    Ok(export_values(seq, count))
}

fn export_values(seq: Sequence, count: usize) -> Vec<Rational> {
    match seq {
        Sequence::ExpTriangle => (0i64..)
            .flat_map(|n| (0..=n).map(move |m| (n, m)))
            .take(count)
            .map(|(n, m)| rational::big(triangles::exp_triangle(n, m).expect("inside the triangle")))
            .collect(),
        Sequence::ExpRowSums => (0..count as u64)
            .map(|n| rational::big(triangles::exp_row_sum(n)))
            .collect(),
        Sequence::DiagFactorial => (0..count as i64)
            .map(|n| {
                let diag: Rational = (0..=n).map(|m| triangles::recip_binom(n - m, m)).sum();
                diag * rational::big(rational::factorial(n as u64))
            })
            .collect(),
        Sequence::EvenRowSums => (0..count as i64)
            .map(|n| {
                let mut s = Rational::zero();
                for m in 0..=2 * n {
                    s += triangles::recip_binom(2 * n, m);
                }
                s
            })
            .collect(),
    }
}
