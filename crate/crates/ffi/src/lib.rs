//! C ABI over `recipbinom`.
//!
//! Fallible functions return an [`RbStatus`] and write results through
//! out-pointers. On failure the message is kept per thread and read with
//! [`rb_last_error_message`]. Handles are opaque and released with their
//! `_free` function; strings handed out are released with [`rb_string_free`].
//! Pointers passed in must be valid for the duration of the call, and string
//! arguments must be NUL-terminated UTF-8.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use recipbinom::closed_forms::{self, ClosedFormId, Expansion};
use recipbinom::identities::{CheckReport, Iden5Variant, Status};
use recipbinom::{numeric, rational, report, triangles, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Divergent = 5,
    OrderCap = 6,
    OutOfRange = 7,
    Series = 8,
    Panic = 9,
}

/// Exact expansion of a closed form.
pub struct RbExpansion(Expansion);

/// Reports produced by one check id.
pub struct RbReport(Vec<CheckReport>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => RbStatus::Parse,
            Error::Domain(_) => RbStatus::Domain,
            Error::DivergentSeries(_) => RbStatus::Divergent,
            Error::OrderCap { .. } => RbStatus::OrderCap,
            Error::OrderExceeded { .. } => RbStatus::OutOfRange,
            Error::ZeroConstantTerm
            | Error::NonzeroConstantTerm
            | Error::OddPartNonzero { .. }
            | Error::OrderExhausted
            | Error::NotDivisible { .. } => RbStatus::Series,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            RbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RbStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(RbStatus::NullArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered values contain no NUL").into_raw()
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn rb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread, or null. Valid until the next
/// call into the library on the same thread.
#[no_mangle]
pub extern "C" fn rb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `1 / binom(n, m)` rendered as `"p/q"` (zero outside the triangle).
#[no_mangle]
pub unsafe extern "C" fn rb_recip_binom(n: i64, m: i64, out: *mut *mut c_char) -> RbStatus {
    guard(|| {
        let s = rational::render(&triangles::recip_binom(n, m));
        write(out, into_c_string(s), "out")
    })
}

/// Table cell `variant` (`"A"`, `"I3"`, ...) at `(n, m)`, rendered as `"p/q"`.
#[no_mangle]
pub unsafe extern "C" fn rb_table_entry(
    variant: *const c_char,
    n: i64,
    m: i64,
    out: *mut *mut c_char,
) -> RbStatus {
    guard(|| {
        let id: ClosedFormId = read_str(variant, "variant")?.parse()?;
        let ClosedFormId::Triangle(v) = id else {
            return Err(Failure(RbStatus::Parse, format!("{id} is not a table cell")));
        };
        let s = rational::render(&triangles::table_entry(v, n, m));
        write(out, into_c_string(s), "out")
    })
}

/// Expands closed form `id` to `order`; the handle goes to `*out`.
#[no_mangle]
pub unsafe extern "C" fn rb_expand(id: *const c_char, order: usize, out: *mut *mut RbExpansion) -> RbStatus {
    guard(|| {
        let id: ClosedFormId = read_str(id, "id")?.parse()?;
        if out.is_null() {
            return Err(null("out"));
        }
        let e = closed_forms::expand(&id, order)?;
        write(out, Box::into_raw(Box::new(RbExpansion(e))), "out")
    })
}

unsafe fn expansion<'a>(h: *const RbExpansion) -> Result<&'a Expansion, Failure> {
    h.as_ref().map(|e| &e.0).ok_or_else(|| null("handle"))
}

#[no_mangle]
pub unsafe extern "C" fn rb_expansion_order(h: *const RbExpansion, out: *mut usize) -> RbStatus {
    guard(|| write(out, expansion(h)?.order(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn rb_expansion_is_bivariate(h: *const RbExpansion, out: *mut bool) -> RbStatus {
    guard(|| write(out, matches!(expansion(h)?, Expansion::Bivariate(_)), "out"))
}

fn coefficient(e: &Expansion, n: usize, m: usize) -> Result<&recipbinom::Rational, Failure> {
    let r = match e {
        Expansion::Bivariate(s) => s.get(n, m),
        Expansion::Univariate(s) if m == 0 => s.get(n),
        Expansion::Univariate(_) => {
            return Err(Failure(RbStatus::OutOfRange, "univariate expansion needs m = 0".to_string()))
        }
    };
    Ok(r?)
}

/// `[x^n y^m]` as `"p/q"`; pass `m = 0` for univariate expansions.
#[no_mangle]
pub unsafe extern "C" fn rb_expansion_coeff(
    h: *const RbExpansion,
    n: usize,
    m: usize,
    out: *mut *mut c_char,
) -> RbStatus {
    guard(|| {
        let c = coefficient(expansion(h)?, n, m)?;
        write(out, into_c_string(rational::render(c)), "out")
    })
}

/// `[x^n y^m]` rounded to a double.
#[no_mangle]
pub unsafe extern "C" fn rb_expansion_coeff_f64(h: *const RbExpansion, n: usize, m: usize, out: *mut f64) -> RbStatus {
    guard(|| {
        let c = coefficient(expansion(h)?, n, m)?;
        write(out, rational::to_f64(c), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn rb_expansion_free(h: *mut RbExpansion) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Runs check `id` (as accepted by the `check` command) up to `max_n`.
#[no_mangle]
pub unsafe extern "C" fn rb_check_run(id: *const c_char, max_n: usize, out: *mut *mut RbReport) -> RbStatus {
    guard(|| {
        let id = read_str(id, "id")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let reports = report::run_check(id, max_n, Iden5Variant::Auto, 1e-9)?;
        write(out, Box::into_raw(Box::new(RbReport(reports))), "out")
    })
}

/// True when no report of the check has status `fail`.
#[no_mangle]
pub unsafe extern "C" fn rb_report_passed(h: *const RbReport, out: *mut bool) -> RbStatus {
    guard(|| {
        let r = h.as_ref().ok_or_else(|| null("handle"))?;
        write(out, r.0.iter().all(|c| c.status != Status::Fail), "out")
    })
}

/// The reports as a JSON array.
#[no_mangle]
pub unsafe extern "C" fn rb_report_json(h: *const RbReport, out: *mut *mut c_char) -> RbStatus {
    guard(|| {
        let r = h.as_ref().ok_or_else(|| null("handle"))?;
        let json = reports_json(&r.0);
        write(out, into_c_string(json), "out")
    })
}

fn reports_json(reports: &[CheckReport]) -> String {
    let doc = report::ReportDocument::new(
        report::ReportConfig {
            max_n: 0,
            tol: 0.0,
            iden5_variant: "auto".to_string(),
            ids: Vec::new(),
        },
        reports.to_vec(),
        Vec::new(),
    );
    doc.to_json()
}

#[no_mangle]
pub unsafe extern "C" fn rb_report_free(h: *mut RbReport) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `Li2(z)`; for `z > 1` the real part, with `*branch_extended` set.
/// `branch_extended` may be null.
#[no_mangle]
pub unsafe extern "C" fn rb_dilog(z: f64, value: *mut f64, branch_extended: *mut bool) -> RbStatus {
    guard(|| {
        let d = numeric::dilog(z);
        write(value, d.value, "value")?;
        if !branch_extended.is_null() {
            branch_extended.write(d.branch_extended);
        }
        Ok(())
    })
}

/// Double evaluation of closed form `id` at `(x, y)`.
#[no_mangle]
pub unsafe extern "C" fn rb_eval_closed(id: *const c_char, x: f64, y: f64, out: *mut f64) -> RbStatus {
    guard(|| {
        let id: ClosedFormId = read_str(id, "id")?.parse()?;
        let v = numeric::eval_closed(&id, x, y)?;
        write(out, v, "out")
    })
}
