//! C ABI over `hermgf`.
//!
//! Objects cross the boundary as opaque heap handles that the caller frees
//! with the matching `hg_*_free` function. Every fallible call returns an
//! [`HgStatus`]; on failure a description is available from
//! [`hg_last_error`] until the next failing call on the same thread.
//! Strings returned to the caller are NUL-terminated and released with
//! [`hg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hermgf::identities::{self, IdentityError};
use hermgf::oracle::{self, OracleError};
use hermgf::cli::NamedSeries;
use hermgf::{HermiteKind, IdentityReport, TruncSeries, UPolynomial};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownName = 3,
    BoundExceeded = 4,
    Internal = 5,
}

/// Polynomial in `u` and `x` over the rationals.
pub struct HgPolynomial(UPolynomial);

/// Truncated power series in `z`.
pub struct HgSeries(TruncSeries);

/// Outcome of one identity verification.
pub struct HgReport(IdentityReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: HgStatus, message: impl ToString) -> HgStatus {
    set_error(message);
    status
}

/// Runs `body`, turning a panic into [`HgStatus::Internal`].
fn guard<F: FnOnce() -> HgStatus>(body: F) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(HgStatus::Internal, "panic inside hermgf"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HgStatus> {
    if s.is_null() {
        return Err(fail(HgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HgStatus::InvalidArgument, "string argument is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> HgStatus {
    *out = Box::into_raw(Box::new(value));
    HgStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NULs removed").into_raw()
}

fn identity_status(e: &IdentityError) -> HgStatus {
    match e {
        IdentityError::UnknownIdentity(_) => HgStatus::UnknownName,
        IdentityError::UnsupportedStride(_) => HgStatus::InvalidArgument,
        _ => HgStatus::Internal,
    }
}

fn oracle_status(e: &OracleError) -> HgStatus {
    match e {
        OracleError::BoundExceeded { .. } => HgStatus::BoundExceeded,
        OracleError::Identity(inner) => identity_status(inner),
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `h_n(u)` for `kind = 'h'`, `H_n(u)` for `kind = 'H'`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn hg_hermite(kind: c_char, n: u32, out: *mut *mut HgPolynomial) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        let kind = match kind as u8 {
            b'h' => HermiteKind::Matching,
            b'H' => HermiteKind::Physicist,
            other => return fail(HgStatus::InvalidArgument, format!("unknown Hermite kind {other}")),
        };
        write_out(out, HgPolynomial(hermgf::hermite::hermite(kind, n)))
    })
}

/// Canonical text form, e.g. `u^3 + 3*u`. Returns NULL for a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_to_string(p: *const HgPolynomial) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(p.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Coefficient of `u^deg_u x^deg_x` as `p` or `p/q`.
///
/// # Safety
/// `p` must be a live polynomial handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_coefficient(
    p: *const HgPolynomial,
    deg_u: u32,
    deg_x: u32,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let Some(p) = p.as_ref() else {
            return fail(HgStatus::NullPointer, "null polynomial");
        };
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        *out = into_c_string(hermgf::rational::render(&p.0.coeff(deg_u, deg_x)));
        HgStatus::Ok
    })
}

/// # Safety
/// `p` must be NULL or a live polynomial handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hg_polynomial_free(p: *mut HgPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Builds a named series (`w`, `tree`, `rhs-main`, ...) to `order`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_expand(name: *const c_char, order: u32, out: *mut *mut HgSeries) -> HgStatus {
    guard(|| {
        let name = match read_str(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        let Some(series) = NamedSeries::from_name(name) else {
            return fail(HgStatus::UnknownName, format!("unknown series `{name}`"));
        };
        match series.build(order) {
            Ok(s) => write_out(out, HgSeries(s)),
            Err(e) => fail(identity_status(&e), e),
        }
    })
}

/// Truncation order of a series, or 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn hg_series_order(s: *const HgSeries) -> u32 {
    s.as_ref().map_or(0, |s| s.0.order())
}

/// Coefficient of `z^n`.
///
/// # Safety
/// `s` must be a live series handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_series_coefficient(s: *const HgSeries, n: u32, out: *mut *mut HgPolynomial) -> HgStatus {
    guard(|| {
        let Some(s) = s.as_ref() else {
            return fail(HgStatus::NullPointer, "null series");
        };
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        match s.0.coefficient(&[n]) {
            Ok(p) => write_out(out, HgPolynomial(p)),
            Err(e) => fail(HgStatus::InvalidArgument, e),
        }
    })
}

/// # Safety
/// `s` must be NULL or a live series handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hg_series_free(s: *mut HgSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Verifies a named identity to `order`. A mismatch is not an error: the
/// call returns `HG_STATUS_OK` and the report says `mismatch`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_verify(name: *const c_char, order: u32, out: *mut *mut HgReport) -> HgStatus {
    guard(|| {
        let name = match read_str(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        match identities::verify_named(name, order) {
            Ok(r) => write_out(out, HgReport(r)),
            Err(IdentityError::RouteDisagreement(r)) => write_out(out, HgReport(*r)),
            Err(e) => fail(identity_status(&e), e),
        }
    })
}

/// `true` iff the report says `verified`; `false` for NULL.
///
/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_is_verified(r: *const HgReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.is_verified())
}

/// The report as JSON:
/// `{"identity", "order", "status", "mismatch": {...} | null}`.
///
/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_to_json(r: *const HgReport) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(r.0.to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `r` must be NULL or a live report handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hg_report_free(r: *mut HgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Weighted census of all matchings on `m` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_matching_census(m: u32, out: *mut *mut HgPolynomial) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        match oracle::enumerate_matchings(m) {
            Ok(p) => write_out(out, HgPolynomial(p)),
            Err(e) => fail(oracle_status(&e), e),
        }
    })
}

/// Number of w-trees with `n` internal vertices, by enumeration.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_w_tree_count(n: u32, out: *mut u64) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        match oracle::enumerate_w_trees(n) {
            Ok(c) => {
                *out = c;
                HgStatus::Ok
            }
            Err(e) => fail(oracle_status(&e), e),
        }
    })
}

/// Factor census check for all `n' <= n` as JSON
/// `{"n_max", "passed", "checks": [...]}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_census_check_json(n: u32, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return fail(HgStatus::NullPointer, "null output pointer");
        }
        match oracle::factor_census_check(n) {
            Ok(report) => {
                let value = serde_json::json!({
                    "n_max": report.n_max,
                    "passed": report.passed(),
                    "checks": report.checks,
                });
                *out = into_c_string(value.to_string());
                HgStatus::Ok
            }
            Err(e) => fail(oracle_status(&e), e),
        }
    })
}
