use std::ffi::{c_char, CStr, CString};
use std::ptr;

use recipbinom_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
    rb_string_free(s);
    owned
}

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn recip_binom_and_table_entry() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(rb_recip_binom(4, 2, &mut out), RbStatus::Ok);
        assert_eq!(take(out), "1/6");
        assert_eq!(rb_recip_binom(2, 5, &mut out), RbStatus::Ok);
        assert_eq!(take(out), "0");
        let k = cstr("K");
        assert_eq!(rb_table_entry(k.as_ptr(), 1, 2, &mut out), RbStatus::Ok);
        assert_eq!(take(out), "1/2");
        let bad = cstr("S3");
        assert_eq!(rb_table_entry(bad.as_ptr(), 1, 2, &mut out), RbStatus::Parse);
    }
}

#[test]
fn expansion_handle() {
    unsafe {
        let id = cstr("A");
        let mut h = ptr::null_mut();
        assert_eq!(rb_expand(id.as_ptr(), 6, &mut h), RbStatus::Ok);
        let mut order = 0usize;
        assert_eq!(rb_expansion_order(h, &mut order), RbStatus::Ok);
        assert_eq!(order, 6);
        let mut bivariate = false;
        assert_eq!(rb_expansion_is_bivariate(h, &mut bivariate), RbStatus::Ok);
        assert!(bivariate);
        let mut s = ptr::null_mut();
        assert_eq!(rb_expansion_coeff(h, 5, 2, &mut s), RbStatus::Ok);
        assert_eq!(take(s), "1/10");
        let mut v = 0.0;
        assert_eq!(rb_expansion_coeff_f64(h, 5, 2, &mut v), RbStatus::Ok);
        assert_eq!(v, 0.1);
        assert_eq!(rb_expansion_coeff(h, 7, 0, &mut s), RbStatus::OutOfRange);
        rb_expansion_free(h);

        let s9 = cstr("S9");
        assert_eq!(rb_expand(s9.as_ptr(), 5, &mut h), RbStatus::Ok);
        assert_eq!(rb_expansion_coeff(h, 1, 1, &mut s), RbStatus::OutOfRange);
        assert_eq!(rb_expansion_coeff(h, 1, 0, &mut s), RbStatus::Ok);
        assert_eq!(take(s), "-1");
        rb_expansion_free(h);
    }
}

#[test]
fn errors_set_last_message() {
    unsafe {
        let mut h = ptr::null_mut();
        let bad = cstr("nope");
        assert_eq!(rb_expand(bad.as_ptr(), 4, &mut h), RbStatus::Parse);
        let msg = CStr::from_ptr(rb_last_error_message()).to_str().unwrap();
        assert!(msg.contains("nope"), "{msg}");
        assert!(h.is_null());

        let a = cstr("A");
        assert_eq!(rb_expand(a.as_ptr(), 10_000, &mut h), RbStatus::OrderCap);
        assert_eq!(rb_expand(ptr::null(), 4, &mut h), RbStatus::NullArgument);
        assert_eq!(rb_expand(a.as_ptr(), 4, ptr::null_mut()), RbStatus::NullArgument);

        let mut v = 0.0;
        assert_eq!(rb_eval_closed(a.as_ptr(), 0.9, 2.0, &mut v), RbStatus::Domain);
        assert_eq!(rb_eval_closed(a.as_ptr(), 0.0, 0.0, &mut v), RbStatus::Ok);
        assert_eq!(v, 1.0);
        assert!(rb_last_error_message().is_null());
    }
}

#[test]
fn checks_and_dilog() {
    unsafe {
        let id = cstr("iden7");
        let mut r = ptr::null_mut();
        assert_eq!(rb_check_run(id.as_ptr(), 10, &mut r), RbStatus::Ok);
        let mut passed = false;
        assert_eq!(rb_report_passed(r, &mut passed), RbStatus::Ok);
        assert!(passed);
        let mut json = ptr::null_mut();
        assert_eq!(rb_report_json(r, &mut json), RbStatus::Ok);
        assert!(take(json).contains("\"id\": \"iden7\""));
        rb_report_free(r);

        let mut v = 0.0;
        let mut ext = false;
        assert_eq!(rb_dilog(1.25, &mut v, &mut ext), RbStatus::Ok);
        assert!(ext);
        assert!((v - 2.190177011441646).abs() < 1e-12);
        assert_eq!(rb_dilog(0.5, &mut v, ptr::null_mut()), RbStatus::Ok);
        assert_eq!(rb_dilog(0.5, ptr::null_mut(), ptr::null_mut()), RbStatus::NullArgument);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(rb_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        rb_string_free(ptr::null_mut());
        rb_expansion_free(ptr::null_mut());
        rb_report_free(ptr::null_mut());
    }
}
