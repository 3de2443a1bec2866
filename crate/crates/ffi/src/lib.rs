//! C ABI over the starforge library.
//!
//! Objects cross the boundary as opaque handles created by `sf_*_new`
//! style functions and released by the matching `sf_*_free`. Every call
//! returns an [`SfStatus`]; on anything but `SF_OK` or `SF_CHECK_FAILED`
//! the message is available from [`sf_last_error`] until the next call on
//! the same thread. Strings handed out must be released with
//! [`sf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use starforge::double::{double_structure_check, fd_axiom_check, r_matrix_check, FdHopf, PairedHopf};
use starforge::frt::{frt_relations, ybe_check, QuadraticAlgebra, RMatrix};
use starforge::parse::parse_poly;
use starforge::report::Report;
use starforge::starprod::{Moyal, StarProduct, SymplecticStructure, NU};
use starforge::verify::{self, Options, Suite};
use starforge::{shipped, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    SfOk = 0,
    /// the computation ran and a check failed
    SfCheckFailed = 1,
    SfNullArgument = 2,
    SfInvalidUtf8 = 3,
    SfParseError = 4,
    SfInvalidInput = 5,
    SfNotInvertible = 6,
    SfIoError = 7,
    SfPanic = 8,
}

/// An R-matrix over Q(q).
pub struct SfRMatrix(RMatrix);

/// The quadratic algebra of FRT relations of an R-matrix.
pub struct SfQuadratic(QuadraticAlgebra);

/// A Drinfeld double D(kG) of a finite group algebra.
pub struct SfDouble {
    paired: PairedHopf,
    double: FdHopf,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SfStatus {
    match e {
        Error::Syntax { .. } | Error::Division { .. } | Error::UnknownVariable(_) => SfStatus::SfParseError,
        Error::NotInvertible(_) => SfStatus::SfNotInvertible,
        Error::Io { .. } => SfStatus::SfIoError,
        _ => SfStatus::SfInvalidInput,
    }
}

struct Fail(SfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<SfStatus, Fail>) -> SfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SfStatus::SfPanic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SfStatus::SfNullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SfStatus::SfInvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(SfStatus::SfNullArgument, format!("{what} is null")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(SfStatus::SfNullArgument, format!("{what} is null")))
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

fn verdict(r: &Report) -> SfStatus {
    if r.passed() {
        SfStatus::SfOk
    } else {
        SfStatus::SfCheckFailed
    }
}

/// Message of the last failing call on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn sf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Moyal product of two expressions over `x1..x(2ell)` truncated at
/// `order`; writes the rendered series to `*result`.
///
/// # Safety
/// `u` and `v` must be nul-terminated strings; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_moyal_star(
    ell: u32,
    u: *const c_char,
    v: *const c_char,
    order: u32,
    result: *mut *mut c_char,
) -> SfStatus {
    guard(|| {
        let (u, v) = (text(u, "u")?, text(v, "v")?);
        let result = out(result, "result")?;
        if ell == 0 {
            return Err(Fail(SfStatus::SfInvalidInput, "ell must be positive".into()));
        }
        let m = Moyal(SymplecticStructure::standard(ell as usize));
        let order = order as usize;
        let a = parse_poly(u, m.vars(), NU, order)?.into_series(NU, order);
        let b = parse_poly(v, m.vars(), NU, order)?.into_series(NU, order);
        *result = string_out(m.star_series(&a, &b)?.to_string());
        Ok(SfStatus::SfOk)
    })
}

/// Runs a verification suite (`moyal`, `hopf`, `smash`, `double`, `frt`,
/// `all`); writes the JSON report to `*report_json`. Returns
/// `SF_CHECK_FAILED` if any check fails.
///
/// # Safety
/// `suite` must be a nul-terminated string; `report_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_verify(suite: *const c_char, seed: u64, report_json: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let suite: Suite = text(suite, "suite")?.parse()?;
        let dst = out(report_json, "report_json")?;
        let r = verify::run(suite, &Options { seed, inject: false })?;
        *dst = string_out(r.to_json());
        Ok(verdict(&r))
    })
}

/// Loads an R-matrix by shipped name (`sl2q`, `nonflat`, `identity`) or
/// JSON file path.
///
/// # Safety
/// `spec` must be a nul-terminated string; `handle_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_rmatrix_load(spec: *const c_char, handle_out: *mut *mut SfRMatrix) -> SfStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        let dst = out(handle_out, "handle_out")?;
        *dst = Box::into_raw(Box::new(SfRMatrix(shipped::r_matrix(spec)?)));
        Ok(SfStatus::SfOk)
    })
}

/// Dimension `n` of `V`.
///
/// # Safety
/// `r` must be a live handle; `n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_rmatrix_dim(r: *const SfRMatrix, n: *mut u32) -> SfStatus {
    guard(|| {
        *out(n, "n")? = handle(r, "r")?.0.n() as u32;
        Ok(SfStatus::SfOk)
    })
}

/// `SF_OK` if the Yang-Baxter equation holds, `SF_CHECK_FAILED` with the
/// witness in [`sf_last_error`] otherwise.
///
/// # Safety
/// `r` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sf_rmatrix_ybe(r: *const SfRMatrix) -> SfStatus {
    guard(|| match ybe_check(&handle(r, "r")?.0) {
        Ok(()) => Ok(SfStatus::SfOk),
        Err(w) => {
            Err(Fail(SfStatus::SfCheckFailed, format!("entry ({}, {}): difference {}", w.row, w.col, w.difference)))
        }
    })
}

/// # Safety
/// `r` must be null or a handle from [`sf_rmatrix_load`], freed once.
#[no_mangle]
pub unsafe extern "C" fn sf_rmatrix_free(r: *mut SfRMatrix) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// FRT relations of `r`, row-reduced.
///
/// # Safety
/// `r` must be a live handle; `handle_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_frt_relations(r: *const SfRMatrix, handle_out: *mut *mut SfQuadratic) -> SfStatus {
    guard(|| {
        let r = handle(r, "r")?;
        let dst = out(handle_out, "handle_out")?;
        *dst = Box::into_raw(Box::new(SfQuadratic(frt_relations(&r.0))));
        Ok(SfStatus::SfOk)
    })
}

/// Number of independent quadratic relations.
///
/// # Safety
/// `q` must be a live handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_quadratic_relation_count(q: *const SfQuadratic, count: *mut u32) -> SfStatus {
    guard(|| {
        *out(count, "count")? = handle(q, "q")?.0.relation_count() as u32;
        Ok(SfStatus::SfOk)
    })
}

/// Relations, one `... = 0` per line.
///
/// # Safety
/// `q` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_quadratic_render(q: *const SfQuadratic, result: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let q = handle(q, "q")?;
        *out(result, "result")? = string_out(q.0.render());
        Ok(SfStatus::SfOk)
    })
}

/// Dimension of the degree-`degree` component (2 or 3) and the
/// commutative benchmark.
///
/// # Safety
/// `q` must be a live handle; `dim` and `benchmark` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_quadratic_flatness(
    q: *const SfQuadratic,
    degree: u32,
    dim: *mut u64,
    benchmark: *mut u64,
) -> SfStatus {
    guard(|| {
        let q = handle(q, "q")?;
        let (dim, benchmark) = (out(dim, "dim")?, out(benchmark, "benchmark")?);
        let f = q.0.flatness_dim(degree)?;
        *dim = f.dim as u64;
        *benchmark = f.benchmark as u64;
        Ok(SfStatus::SfOk)
    })
}

/// # Safety
/// `q` must be null or a handle from [`sf_frt_relations`], freed once.
#[no_mangle]
pub unsafe extern "C" fn sf_quadratic_free(q: *mut SfQuadratic) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Builds `D(kG)` for a group given by shipped name (`Z2`, `S3`, ..) or
/// JSON file path.
///
/// # Safety
/// `group` must be a nul-terminated string; `handle_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_double_build(group: *const c_char, handle_out: *mut *mut SfDouble) -> SfStatus {
    guard(|| {
        let g = shipped::finite_group(text(group, "group")?)?;
        let dst = out(handle_out, "handle_out")?;
        let paired = PairedHopf::canonical(FdHopf::group_algebra(&g))?;
        let double = paired.double_hopf_unchecked();
        *dst = Box::into_raw(Box::new(SfDouble { paired, double }));
        Ok(SfStatus::SfOk)
    })
}

/// Dimension of the double.
///
/// # Safety
/// `d` must be a live handle; `dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_double_dim(d: *const SfDouble, dim: *mut u64) -> SfStatus {
    guard(|| {
        *out(dim, "dim")? = handle(d, "d")?.double.dim() as u64;
        Ok(SfStatus::SfOk)
    })
}

/// Hopf axioms, structure identities and R-matrix checks; writes the JSON
/// report to `*report_json`.
///
/// # Safety
/// `d` must be a live handle; `report_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_double_check(d: *const SfDouble, report_json: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let d = handle(d, "d")?;
        let dst = out(report_json, "report_json")?;
        let mut r = Report::new();
        r.extend("axioms", fd_axiom_check(&d.double));
        r.extend("structure", double_structure_check(&d.paired)?);
        r.extend("r_matrix", r_matrix_check(&d.paired, &d.double));
        *dst = string_out(r.to_json());
        Ok(verdict(&r))
    })
}

/// # Safety
/// `d` must be null or a handle from [`sf_double_build`], freed once.
#[no_mangle]
pub unsafe extern "C" fn sf_double_free(d: *mut SfDouble) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        assert_eq!(status_of(&Error::Syntax { offset: 3, message: "x".into() }), SfStatus::SfParseError);
        assert_eq!(status_of(&Error::NotInvertible("m".into())), SfStatus::SfNotInvertible);
        assert_eq!(status_of(&Error::Invalid("bad".into())), SfStatus::SfInvalidInput);
    }

    #[test]
    fn panic_is_contained() {
        let s = guard(|| panic!("boom"));
        assert_eq!(s, SfStatus::SfPanic);
        let msg = LAST_ERROR.with(|e| e.borrow().clone()).unwrap();
        assert_eq!(msg.to_str().unwrap(), "internal panic");
        assert_eq!(guard(|| Ok(SfStatus::SfOk)), SfStatus::SfOk);
        assert!(LAST_ERROR.with(|e| e.borrow().is_none()));
    }
}
