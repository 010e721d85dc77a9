//! C ABI over `equideg`.
//!
//! Handles are opaque and owned by the caller. Every fallible call returns an
//! [`EquidegStatus`]; the message of the most recent failure on the calling
//! thread is available from [`equideg_last_error`]. Strings returned through
//! out-parameters must be released with [`equideg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use equideg::bifurcation::Mode;
use equideg::burnside::to_term_list;
use equideg::model_io::{load_model, run_report, BifurcationReport, Model, ModelConfig};
use equideg::spectrum::{bessel_zero_sq, Triple};
use equideg::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquidegStatus {
    Ok = 0,
    NullArgument = 1,
    /// Invalid configuration or input, the CLI's exit code 2.
    ConfigError = 2,
    /// Failure during computation, the CLI's exit code 3.
    ComputationError = 3,
    InvalidUtf8 = 4,
    Panic = 5,
}

/// Loaded model.
pub struct EquidegModel(Model);

/// Computed report.
pub struct EquidegReport(BifurcationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: Error) -> EquidegStatus {
    let status = if e.is_config_error() {
        EquidegStatus::ConfigError
    } else {
        EquidegStatus::ComputationError
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> EquidegStatus) -> EquidegStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            EquidegStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, EquidegStatus> {
    if s.is_null() {
        set_error("null argument".into());
        return Err(EquidegStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".into());
        EquidegStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> EquidegStatus {
    *out = CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw();
    EquidegStatus::Ok
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null argument".into());
            return EquidegStatus::NullArgument;
        }
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

macro_rules! arg {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn equideg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn equideg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a model from a JSON file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_model_load(path: *const c_char, out: *mut *mut EquidegModel) -> EquidegStatus {
    guard(|| {
        nonnull!(out);
        let path = arg!(read_str(path));
        let m = tri!(load_model(path));
        *out = Box::into_raw(Box::new(EquidegModel(m)));
        EquidegStatus::Ok
    })
}

/// Builds a model from a JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_model_from_json(json: *const c_char, out: *mut *mut EquidegModel) -> EquidegStatus {
    guard(|| {
        nonnull!(out);
        let json = arg!(read_str(json));
        let m = tri!(ModelConfig::from_json(json).and_then(Model::new));
        *out = Box::into_raw(Box::new(EquidegModel(m)));
        EquidegStatus::Ok
    })
}

/// # Safety
/// `model` must come from a loader here, or be null.
#[no_mangle]
pub unsafe extern "C" fn equideg_model_free(model: *mut EquidegModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Number of critical points of the model.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_critical_point_count(model: *const EquidegModel, out: *mut usize) -> EquidegStatus {
    guard(|| {
        nonnull!(model, out);
        *out = tri!((*model).0.spectrum.critical_points()).len();
        EquidegStatus::Ok
    })
}

/// Critical point `index` in increasing `α`: its `(n, m, j)` and `α`.
///
/// # Safety
/// `model` must be a live handle; every out-pointer writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_critical_point(
    model: *const EquidegModel,
    index: usize,
    n: *mut u32,
    m: *mut u32,
    j: *mut usize,
    alpha: *mut f64,
) -> EquidegStatus {
    guard(|| {
        nonnull!(model, n, m, j, alpha);
        let cps = tri!((*model).0.spectrum.critical_points());
        let Some(c) = cps.get(index) else {
            set_error(format!("index {index} out of range ({} critical points)", cps.len()));
            return EquidegStatus::ConfigError;
        };
        (*n, *m, *j, *alpha) = (c.id.n, c.id.m, c.id.j, c.alpha);
        EquidegStatus::Ok
    })
}

/// Basic degree of `V_{m,j}` as JSON terms.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_basic_degree_json(
    model: *const EquidegModel,
    m: u32,
    j: usize,
    out: *mut *mut c_char,
) -> EquidegStatus {
    guard(|| {
        nonnull!(model, out);
        let model = &(*model).0;
        let d = tri!(model.book.basic_degree(m, j));
        let terms = to_term_list(&d, model.ambient());
        write_string(out, serde_json::to_string(&terms).expect("serializes"))
    })
}

/// Local invariant at `(n, m, j)` as JSON terms; `full` selects the full
/// rather than the relative mode.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_invariant_json(
    model: *const EquidegModel,
    n: u32,
    m: u32,
    j: usize,
    full: bool,
    out: *mut *mut c_char,
) -> EquidegStatus {
    guard(|| {
        nonnull!(model, out);
        let model = &(*model).0;
        let p = tri!(model.problem());
        let mode = if full { Mode::Full } else { Mode::Relative };
        let cp = tri!(p.critical_point(Triple::new(n, m, j)));
        let w = tri!(p.local_invariant(cp, mode));
        let terms = to_term_list(&w.value, model.ambient());
        write_string(out, serde_json::to_string(&terms).expect("serializes"))
    })
}

/// Runs the full analysis.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_report_run(model: *const EquidegModel, out: *mut *mut EquidegReport) -> EquidegStatus {
    guard(|| {
        nonnull!(model, out);
        let r = tri!(run_report(&(*model).0));
        *out = Box::into_raw(Box::new(EquidegReport(r)));
        EquidegStatus::Ok
    })
}

/// # Safety
/// `report` must come from [`equideg_report_run`], or be null.
#[no_mangle]
pub unsafe extern "C" fn equideg_report_free(report: *mut EquidegReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// The report as JSON.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_report_json(report: *const EquidegReport, out: *mut *mut c_char) -> EquidegStatus {
    guard(|| {
        nonnull!(report, out);
        write_string(out, (*report).0.to_json())
    })
}

/// Squared Bessel zero `s_{nm} = j_{m,n}^2`, `n >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn equideg_bessel_zero_sq(m: u32, n: usize, out: *mut f64) -> EquidegStatus {
    guard(|| {
        nonnull!(out);
        *out = tri!(bessel_zero_sq(m, n));
        EquidegStatus::Ok
    })
}
