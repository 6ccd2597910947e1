//! C interface to `gmodular`.
//!
//! Every call takes an opaque [`GmContext`] and returns a [`GmStatus`];
//! values come back through out-pointers. After a non-`OK` status the
//! message is available from [`gm_last_error`] until the next call on the
//! same context.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use gmodular::elliptic::{ell_e, ell_k, OrderParam, Radius};
use gmodular::harness::{run_suite, suite_ids, GridSpec, SuiteReport};
use gmodular::modular::{eta, lambda, mu, mu_inv, phi};
use gmodular::{Error, EvalConfig};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GmStatus {
    Ok = 0,
    Domain = 1,
    NonConvergence = 2,
    UnsupportedRegime = 3,
    Overflow = 4,
    Unknown = 5,
    InvalidGrid = 6,
    NullPointer = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

impl From<&Error> for GmStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => Self::Domain,
            Error::NonConvergence(_) => Self::NonConvergence,
            Error::UnsupportedRegime(_) => Self::UnsupportedRegime,
            Error::Overflow(_) => Self::Overflow,
            Error::Unknown(_) => Self::Unknown,
            Error::InvalidGrid(_) => Self::InvalidGrid,
        }
    }
}

/// Evaluation settings plus the last error message.
pub struct GmContext {
    cfg: EvalConfig,
    last_error: Option<CString>,
}

/// Result of a suite run.
pub struct GmReport {
    report: SuiteReport,
}

enum Failure {
    Lib(Error),
    Status(GmStatus, &'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn record(ctx: &mut GmContext, f: Failure) -> GmStatus {
    let (status, msg) = match f {
        Failure::Lib(e) => (GmStatus::from(&e), e.to_string()),
        Failure::Status(s, m) => (s, m.to_string()),
    };
    ctx.last_error = CString::new(msg).ok();
    status
}

/// Run `body` with panics and errors turned into a status on `ctx`.
///
/// # Safety
/// `ctx` must be null or a live pointer from [`gm_context_new`].
unsafe fn guarded(
    ctx: *mut GmContext,
    body: impl FnOnce(&EvalConfig) -> Result<(), Failure>,
) -> GmStatus {
    let Some(ctx) = ctx.as_mut() else {
        return GmStatus::NullPointer;
    };
    ctx.last_error = None;
    let cfg = ctx.cfg;
    match catch_unwind(AssertUnwindSafe(|| body(&cfg))) {
        Ok(Ok(())) => GmStatus::Ok,
        Ok(Err(f)) => record(ctx, f),
        Err(_) => record(ctx, Failure::Status(GmStatus::Panic, "internal panic")),
    }
}

unsafe fn write_out(out: *mut f64, v: f64) -> Result<(), Failure> {
    match out.as_mut() {
        Some(slot) => {
            *slot = v;
            Ok(())
        }
        None => Err(Failure::Status(
            GmStatus::NullPointer,
            "output pointer is null",
        )),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Status(
            GmStatus::NullPointer,
            "string argument is null",
        ));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::Status(GmStatus::InvalidUtf8, "string argument is not UTF-8"))
}

/// New context with default settings. Free with [`gm_context_free`].
#[no_mangle]
pub extern "C" fn gm_context_new() -> *mut GmContext {
    Box::into_raw(Box::new(GmContext {
        cfg: EvalConfig::default(),
        last_error: None,
    }))
}

/// # Safety
/// `ctx` must be null or come from [`gm_context_new`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn gm_context_free(ctx: *mut GmContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Override the series tolerance and the argument where the expansion
/// around 1 takes over.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn gm_context_set_series(
    ctx: *mut GmContext,
    series_tol: f64,
    near_one_switch: f64,
) -> GmStatus {
    let Some(c) = ctx.as_mut() else {
        return GmStatus::NullPointer;
    };
    let cfg = EvalConfig {
        series_tol,
        near_one_switch,
        ..c.cfg
    };
    match cfg.validate() {
        Ok(()) => {
            c.cfg = cfg;
            c.last_error = None;
            GmStatus::Ok
        }
        Err(e) => record(c, Failure::Lib(e)),
    }
}

/// Message of the last failed call on `ctx`, or null. Owned by the context.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn gm_last_error(ctx: *const GmContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.last_error.as_ref()) {
        Some(s) => s.as_ptr(),
        None => ptr::null(),
    }
}

/// `K_a(r)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_ell_k(ctx: *mut GmContext, a: f64, r: f64, out: *mut f64) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, ell_k(OrderParam::new(a)?, Radius::new(r)?, cfg)?)
    })
}

/// `E_a(r)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_ell_e(ctx: *mut GmContext, a: f64, r: f64, out: *mut f64) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, ell_e(OrderParam::new(a)?, Radius::new(r)?, cfg)?)
    })
}

/// `μ_a(r)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_mu(ctx: *mut GmContext, a: f64, r: f64, out: *mut f64) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, mu(OrderParam::new(a)?, Radius::new(r)?, cfg)?)
    })
}

/// `μ_a⁻¹(y)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_mu_inv(ctx: *mut GmContext, a: f64, y: f64, out: *mut f64) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, mu_inv(OrderParam::new(a)?, y, cfg, &cfg.solver())?.s)
    })
}

/// `φ_K^a(r)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_phi(
    ctx: *mut GmContext,
    a: f64,
    k: f64,
    r: f64,
    out: *mut f64,
) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, phi(OrderParam::new(a)?, k, Radius::new(r)?, cfg)?)
    })
}

/// `η_K^a(x)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_eta(
    ctx: *mut GmContext,
    a: f64,
    k: f64,
    x: f64,
    out: *mut f64,
) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, eta(OrderParam::new(a)?, k, x, cfg)?)
    })
}

/// `λ_a(K)`
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_lambda(ctx: *mut GmContext, a: f64, k: f64, out: *mut f64) -> GmStatus {
    guarded(ctx, |cfg| {
        write_out(out, lambda(OrderParam::new(a)?, k, cfg)?)
    })
}

fn suite_names() -> &'static [CString] {
    static NAMES: OnceLock<Vec<CString>> = OnceLock::new();
    NAMES.get_or_init(|| {
        suite_ids()
            .into_iter()
            .map(|s| CString::new(s).unwrap())
            .collect()
    })
}

/// Number of registered suites.
#[no_mangle]
pub extern "C" fn gm_suite_count() -> usize {
    suite_names().len()
}

/// Id of suite `index`, or null past the end. The string is static.
#[no_mangle]
pub extern "C" fn gm_suite_id(index: usize) -> *const c_char {
    suite_names().get(index).map_or(ptr::null(), |s| s.as_ptr())
}

/// Run a suite on the default grid. On success `*out` receives a report
/// to be released with [`gm_report_free`]; failed checks still return `OK`.
///
/// # Safety
/// `ctx` must be a live context, `suite_id` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gm_run_suite(
    ctx: *mut GmContext,
    suite_id: *const c_char,
    slack: f64,
    out: *mut *mut GmReport,
) -> GmStatus {
    guarded(ctx, |cfg| {
        if out.is_null() {
            return Err(Failure::Status(
                GmStatus::NullPointer,
                "output pointer is null",
            ));
        }
        let id = read_str(suite_id)?;
        let report = run_suite(id, &GridSpec::default(), slack, cfg)?;
        *out = Box::into_raw(Box::new(GmReport { report }));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or come from [`gm_run_suite`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn gm_report_free(report: *mut GmReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of evaluated points; 0 for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn gm_report_total(report: *const GmReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.total)
}

/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn gm_report_failures(report: *const GmReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.failures.len())
}

/// Smallest scaled margin; NaN for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn gm_report_min_margin(report: *const GmReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.report.min_margin)
}

/// Exit code the command-line tool would give for this report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn gm_report_exit_code(report: *const GmReport) -> i32 {
    report.as_ref().map_or(2, |r| r.report.exit_code())
}
