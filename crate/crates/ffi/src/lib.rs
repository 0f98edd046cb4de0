//! C ABI for truncw.
//!
//! Objects are opaque handles released with their `_free` function. Every
//! call returns a `TruncwStatus`; on failure `truncw_last_error` describes
//! the cause. Strings returned through out-parameters are owned by the
//! caller and released with `truncw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use truncw::cli::{self, Command, Format, RunConfig};
use truncw::exact_algebra::scalar::fmt_frac;
use truncw::glnp_basis::GlpBasis;
use truncw::representations::{qdet, rtt_grid_failure, tensor_from_weights, YangianRep};
use truncw::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    NotClassifiable = 4,
    VerificationFailed = 5,
    Internal = 6,
}

/// The gl(p) basis adapted to the principal sl(2).
pub struct TruncwBasis(GlpBasis);

/// A finite-dimensional Yangian module given by its mode matrices.
pub struct TruncwRep(YangianRep);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TruncwStatus {
    match e {
        Error::OutOfRange(_) | Error::TooLarge(_) => TruncwStatus::OutOfRange,
        Error::NotClassifiable(_) => TruncwStatus::NotClassifiable,
        Error::InvalidInput(_) | Error::ContextMismatch(_) | Error::ZeroDenominator | Error::ShapeMismatch(_) => {
            TruncwStatus::InvalidInput
        }
        Error::Degenerate(_) => TruncwStatus::Internal,
    }
}

fn fail(status: TruncwStatus, msg: &str) -> TruncwStatus {
    set_error(msg);
    status
}

fn guard<F: FnOnce() -> TruncwStatus>(f: F) -> TruncwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TruncwStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, TruncwStatus> {
    if p.is_null() {
        return Err(fail(TruncwStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(TruncwStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: &str) -> TruncwStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TruncwStatus::Ok
        }
        Err(_) => fail(TruncwStatus::Internal, "output contains a NUL byte"),
    }
}

/// Message for the last failing call on this thread. Valid until the next
/// failing call; never NULL.
#[no_mangle]
pub extern "C" fn truncw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn truncw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_basis_new(p: usize, out: *mut *mut TruncwBasis) -> TruncwStatus {
    guard(|| {
        if out.is_null() {
            return fail(TruncwStatus::NullPointer, "null out pointer");
        }
        match GlpBasis::new(p) {
            Ok(b) => {
                *out = Box::into_raw(Box::new(TruncwBasis(b)));
                TruncwStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// # Safety
/// `b` must come from `truncw_basis_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn truncw_basis_free(b: *mut TruncwBasis) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Coefficient of M_{r,s} in M_{j,m} M_{l,n} as an "n/d" string.
///
/// # Safety
/// `b` must be a live basis handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_basis_cg(
    b: *const TruncwBasis,
    j: usize,
    m: i64,
    l: usize,
    n: i64,
    r: usize,
    s: i64,
    out: *mut *mut c_char,
) -> TruncwStatus {
    guard(|| {
        if b.is_null() || out.is_null() {
            return fail(TruncwStatus::NullPointer, "null argument");
        }
        match (*b).0.cg(j, m, l, n, r, s) {
            Ok(c) => write_string(out, &fmt_frac(&c)),
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Tensor product of evaluation modules of gl(n); `factors` uses the CLI
/// syntax "1,0;1/2,-1/2".
///
/// # Safety
/// `factors` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_rep_new(n: usize, factors: *const c_char, out: *mut *mut TruncwRep) -> TruncwStatus {
    guard(|| {
        if out.is_null() {
            return fail(TruncwStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(factors) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let built = cli::parse_factors(text, n).and_then(|f| tensor_from_weights(&f));
        match built {
            Ok(rep) => {
                *out = Box::into_raw(Box::new(TruncwRep(rep)));
                TruncwStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// # Safety
/// `r` must come from `truncw_rep_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn truncw_rep_free(r: *mut TruncwRep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle and `dim` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_rep_dim(r: *const TruncwRep, dim: *mut usize) -> TruncwStatus {
    if r.is_null() || dim.is_null() {
        return fail(TruncwStatus::NullPointer, "null argument");
    }
    *dim = (*r).0.dim;
    TruncwStatus::Ok
}

/// Checks the RTT relation on the module. Returns `VerificationFailed`
/// with the offending index tuple in the error message when it fails.
///
/// # Safety
/// `r` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn truncw_rep_rtt_check(r: *const TruncwRep) -> TruncwStatus {
    guard(|| {
        if r.is_null() {
            return fail(TruncwStatus::NullPointer, "null argument");
        }
        match rtt_grid_failure(&(*r).0) {
            None => TruncwStatus::Ok,
            Some(idx) => fail(TruncwStatus::VerificationFailed, &format!("RTT fails at {idx:?}")),
        }
    })
}

/// Coefficients 1, d_1, ..., d_len-1 of the quantum determinant as a
/// comma-separated list of "n/d" strings.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_rep_qdet(r: *const TruncwRep, len: usize, out: *mut *mut c_char) -> TruncwStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return fail(TruncwStatus::NullPointer, "null argument");
        }
        match qdet(&(*r).0).series() {
            Ok(s) => {
                let d: Vec<String> = s.expansion(len).iter().map(fmt_frac).collect();
                write_string(out, &d.join(","))
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

fn config(n: usize, p: usize, command: Command) -> RunConfig {
    RunConfig { n, p, format: Format::Json, seed: 0, bounds: 27, factors: None, command }
}

/// Classifies Drinfeld data given as JSON (the CLI `classify` input) and
/// writes the JSON verdict.
///
/// # Safety
/// `input` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_classify_json(
    n: usize,
    p: usize,
    input: *const c_char,
    out: *mut *mut c_char,
) -> TruncwStatus {
    guard(|| {
        if out.is_null() {
            return fail(TruncwStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(input) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if n == 0 || p == 0 {
            return fail(TruncwStatus::InvalidInput, "N and p must be positive");
        }
        match cli::classify_input(&config(n, p, Command::Classify { input: None }), text) {
            Ok(o) => write_string(out, &o.stdout),
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Runs a verification suite ("rtt", "soldering", "dirac", "identify",
/// "center", "cohomology", "all", "basis", "yangian", "coproduct") and
/// writes the JSON report. Returns `VerificationFailed` when any check
/// fails; the report is written either way.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn truncw_verify(
    n: usize,
    p: usize,
    suite: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> TruncwStatus {
    guard(|| {
        if out.is_null() {
            return fail(TruncwStatus::NullPointer, "null out pointer");
        }
        *out = ptr::null_mut();
        let suite = match read_str(suite) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let args = [
            "truncw".to_string(),
            "verify".into(),
            "--suite".into(),
            suite.into(),
            "--N".into(),
            n.to_string(),
            "--p".into(),
            p.to_string(),
            "--seed".into(),
            seed.to_string(),
        ];
        let o = cli::run(args);
        match o.code {
            0 => write_string(out, &o.stdout),
            1 if !o.stdout.is_empty() => {
                let s = write_string(out, &o.stdout);
                if s != TruncwStatus::Ok {
                    return s;
                }
                fail(TruncwStatus::VerificationFailed, "a verification check failed")
            }
            2 => fail(TruncwStatus::InvalidInput, o.stderr.trim()),
            _ => fail(TruncwStatus::Internal, o.stderr.trim()),
        }
    })
}
