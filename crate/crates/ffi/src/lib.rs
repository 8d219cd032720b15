//! C ABI over `yzq-core`.
//!
//! Series are returned as opaque `YzqSeries` handles owned by the caller and
//! released with [`yzq_series_free`]. Coefficients come back as canonical
//! `"p/q"` strings released with [`yzq_string_free`]. Every fallible call
//! returns a [`YzqStatus`]; on failure [`yzq_last_error_message`] describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use yzq_core::cli::verify::{run_suite, Perturbation, Suite};
use yzq_core::rational::to_canonical;
use yzq_core::{PowerSeries, SeriesId};

/// Status codes. `YZQ_STATUS_OK` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YzqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownSeries = 3,
    UnknownSuite = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Opaque handle to an exact truncated series.
pub struct YzqSeries {
    id: SeriesId,
    series: PowerSeries,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: YzqStatus, msg: &str) -> YzqStatus {
    set_error(msg);
    status
}

fn guarded(f: impl FnOnce() -> YzqStatus) -> YzqStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(YzqStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, YzqStatus> {
    if p.is_null() {
        return Err(fail(YzqStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(YzqStatus::InvalidUtf8, "argument is not UTF-8"))
}

/// Message for the last failed call on this thread. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn yzq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn yzq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Computes the named series through `t^order` into `*out`.
///
/// # Safety
/// `id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yzq_series_new(id: *const c_char, order: usize, out: *mut *mut YzqSeries) -> YzqStatus {
    guarded(|| {
        if out.is_null() {
            return fail(YzqStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let name = match read_str(id) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let id: SeriesId = match name.parse() {
            Ok(id) => id,
            Err(e) => return fail(YzqStatus::UnknownSeries, &e.to_string()),
        };
        let series = id.compute(order);
        *out = Box::into_raw(Box::new(YzqSeries { id, series }));
        YzqStatus::Ok
    })
}

/// # Safety
/// `s` must come from [`yzq_series_new`] and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn yzq_series_free(s: *mut YzqSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yzq_series_order(s: *const YzqSeries, out: *mut usize) -> YzqStatus {
    if s.is_null() || out.is_null() {
        return fail(YzqStatus::NullPointer, "null argument");
    }
    *out = (*s).series.order();
    YzqStatus::Ok
}

/// Writes the series name (static string) into `*out`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yzq_series_id(s: *const YzqSeries, out: *mut *const c_char) -> YzqStatus {
    if s.is_null() || out.is_null() {
        return fail(YzqStatus::NullPointer, "null argument");
    }
    let name: &'static CStr = match (*s).id {
        SeriesId::N0 => c"N0",
        SeriesId::P0 => c"P0",
        SeriesId::M0 => c"M0",
        SeriesId::Q => c"Q",
        SeriesId::G2 => c"G2",
        SeriesId::Ge => c"Ge",
        SeriesId::Go => c"Go",
        SeriesId::M1TauF => c"M1_tauF",
        SeriesId::Mv12 => c"MV_1_2",
        SeriesId::P1Tau2F => c"P1_tau2F",
        SeriesId::Pu12 => c"PU_1_2",
        SeriesId::Ode1LhsM => c"ODE1_LHS_M",
        SeriesId::Ode1LhsP => c"ODE1_LHS_P",
    };
    *out = name.as_ptr();
    YzqStatus::Ok
}

/// Coefficient of `t^k` as a newly allocated canonical string.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer. Release the string
/// with [`yzq_string_free`].
#[no_mangle]
pub unsafe extern "C" fn yzq_series_coefficient(s: *const YzqSeries, k: usize, out: *mut *mut c_char) -> YzqStatus {
    guarded(|| {
        if s.is_null() || out.is_null() {
            return fail(YzqStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let series = &(*s).series;
        if k > series.order() {
            return fail(
                YzqStatus::OutOfRange,
                &format!("degree {k} is above the truncation order {}", series.order()),
            );
        }
        let text = CString::new(to_canonical(series.coeff(k))).expect("no interior NUL");
        *out = text.into_raw();
        YzqStatus::Ok
    })
}

/// # Safety
/// `p` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn yzq_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Runs a verify suite (`qmod`, `n0-ode`, `ode3`, `prop31`, `lemma5-6`,
/// `lemma7`, `all`). `*passed` tells whether every identity held;
/// `*first_failure` is the smallest failing degree, or -1.
///
/// # Safety
/// `suite` must be a NUL-terminated string; the output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn yzq_verify(
    suite: *const c_char,
    order: usize,
    passed: *mut bool,
    first_failure: *mut i64,
) -> YzqStatus {
    guarded(|| {
        if passed.is_null() || first_failure.is_null() {
            return fail(YzqStatus::NullPointer, "null output pointer");
        }
        let name = match read_str(suite) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let Some(suite) = Suite::from_name(name) else {
            return fail(YzqStatus::UnknownSuite, &format!("unknown suite: {name}"));
        };
        let reports = run_suite(suite, order, &Perturbation::default());
        *passed = reports.iter().all(|r| r.passed);
        *first_failure = reports.iter().filter_map(|r| r.first_failure_degree).min().map_or(-1, |k| k as i64);
        YzqStatus::Ok
    })
}
