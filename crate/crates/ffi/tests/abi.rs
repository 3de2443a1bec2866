use std::ffi::{CStr, CString};
use std::ptr;

use starforge_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { sf_string_free(s) };
    out
}

fn last_error() -> String {
    let p = sf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn moyal_star_roundtrip() {
    let (u, v) = (CString::new("x1").unwrap(), CString::new("x2").unwrap());
    let mut out = ptr::null_mut();
    let s = unsafe { sf_moyal_star(1, u.as_ptr(), v.as_ptr(), 2, &mut out) };
    assert_eq!(s, SfStatus::SfOk);
    assert_eq!(take(out), "x1*x2 - nu");
    assert!(sf_last_error().is_null());
}

#[test]
fn errors_map_to_codes() {
    let bad = CString::new("x1 +* x2").unwrap();
    let ok = CString::new("x1").unwrap();
    let mut out = ptr::null_mut();
    let s = unsafe { sf_moyal_star(1, bad.as_ptr(), ok.as_ptr(), 2, &mut out) };
    assert_eq!(s, SfStatus::SfParseError);
    assert!(last_error().contains("offset 4"), "{}", last_error());
    assert!(out.is_null());
    let s = unsafe { sf_moyal_star(1, ptr::null(), ok.as_ptr(), 2, &mut out) };
    assert_eq!(s, SfStatus::SfNullArgument);
    let suite = CString::new("nope").unwrap();
    assert_eq!(unsafe { sf_verify(suite.as_ptr(), 1, &mut out) }, SfStatus::SfInvalidInput);
    let missing = CString::new("no/such/file.json").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { sf_rmatrix_load(missing.as_ptr(), &mut r) }, SfStatus::SfIoError);
}

#[test]
fn frt_handles() {
    let name = CString::new("sl2q").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { sf_rmatrix_load(name.as_ptr(), &mut r) }, SfStatus::SfOk);
    let mut n = 0;
    assert_eq!(unsafe { sf_rmatrix_dim(r, &mut n) }, SfStatus::SfOk);
    assert_eq!(n, 2);
    assert_eq!(unsafe { sf_rmatrix_ybe(r) }, SfStatus::SfOk);
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { sf_frt_relations(r, &mut q) }, SfStatus::SfOk);
    let mut count = 0;
    assert_eq!(unsafe { sf_quadratic_relation_count(q, &mut count) }, SfStatus::SfOk);
    assert_eq!(count, 6);
    let (mut dim, mut bench) = (0, 0);
    assert_eq!(unsafe { sf_quadratic_flatness(q, 3, &mut dim, &mut bench) }, SfStatus::SfOk);
    assert_eq!((dim, bench), (20, 20));
    assert_eq!(unsafe { sf_quadratic_flatness(q, 4, &mut dim, &mut bench) }, SfStatus::SfInvalidInput);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { sf_quadratic_render(q, &mut text) }, SfStatus::SfOk);
    assert!(take(text).contains("t11*t12 - q*t12*t11 = 0"));
    unsafe {
        sf_quadratic_free(q);
        sf_rmatrix_free(r);
        sf_rmatrix_free(ptr::null_mut());
    }
}

#[test]
fn double_handles() {
    let name = CString::new("S3").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sf_double_build(name.as_ptr(), &mut d) }, SfStatus::SfOk);
    let mut dim = 0;
    assert_eq!(unsafe { sf_double_dim(d, &mut dim) }, SfStatus::SfOk);
    assert_eq!(dim, 36);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sf_double_check(d, &mut json) }, SfStatus::SfOk);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    unsafe { sf_double_free(d) };
}

#[test]
fn verify_reports_check_failures() {
    let suite = CString::new("frt").unwrap();
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sf_verify(suite.as_ptr(), 7, &mut json) }, SfStatus::SfOk);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["seed"], 7);
    let nonflat = CString::new("nonflat").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { sf_rmatrix_load(nonflat.as_ptr(), &mut r) }, SfStatus::SfOk);
    assert_eq!(unsafe { sf_rmatrix_ybe(r) }, SfStatus::SfOk);
    unsafe { sf_rmatrix_free(r) };
}
