//! C ABI over `arapath`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every call returns an [`AraStatus`];
//! on failure a description is kept per thread and read with
//! [`ara_last_error`]. Strings handed out are NUL-terminated, UTF-8, and must
//! be released with [`ara_string_free`]. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use arapath::cli::CertificateJson;
use arapath::groebner::Budget;
use arapath::hochster::{projective_dimension, DEFAULT_VARIABLE_CAP, MAX_VARIABLE_CAP};
use arapath::ideal::{verify_text, MonomialIdeal};
use arapath::paths::{
    ara_formula, construct_certificate, path_ideal, CertificateOptions, CertificateStatus, VerifyPolicy,
};
use arapath::ring::PrimeField;
use arapath::Error;

/// Result code of every `ara_*` call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AraStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed text, bad parameters or a non-square-free ideal.
    ParseError = 2,
    /// No block pair for `t`; the certificate is still returned.
    Degraded = 3,
    VerificationFailed = 4,
    /// A Groebner budget or the Hochster variable cap was hit.
    ResourceLimit = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// Verification policy for [`ara_construct`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AraVerify {
    Auto = 0,
    Always = 1,
    Never = 2,
}

/// Opaque square-free monomial ideal.
pub struct AraIdeal(MonomialIdeal);

/// Opaque construction certificate.
pub struct AraCertificate(arapath::paths::AraCertificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> AraStatus {
    match e {
        Error::Budget(_) | Error::VariableCap { .. } => AraStatus::ResourceLimit,
        Error::VerificationFailed(_) | Error::InvariantViolation(_) => AraStatus::VerificationFailed,
        Error::PairUnavailable(_) => AraStatus::Degraded,
        Error::NotPrime(_) => AraStatus::InvalidArgument,
        _ => AraStatus::ParseError,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<AraStatus, (AraStatus, String)>) -> AraStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AraStatus::Panic
        }
    }
}

fn lib<T>(r: arapath::Result<T>) -> Result<T, (AraStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (AraStatus, String) {
    (AraStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (AraStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (AraStatus::ParseError, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (AraStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (AraStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn c_string(s: String) -> Result<*mut c_char, (AraStatus, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (AraStatus::InvalidArgument, "string contains NUL".into()))
}

fn field(p: u32) -> Result<PrimeField, (AraStatus, String)> {
    lib(PrimeField::new(p as u64))
}

/// Description of the last failure on this thread, or null. The pointer
/// stays valid until the next `ara_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ara_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ara_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The closed formula for the arithmetical rank of `I_t(L_n)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_formula_value(n: u32, t: u32, out: *mut u32) -> AraStatus {
    guard(|| {
        let out = unsafe { self::out(out, "out") }?;
        *out = lib(ara_formula(n, t))?;
        Ok(AraStatus::Ok)
    })
}

/// `I_t(L_n)` as a new handle.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_path_ideal(n: u32, t: u32, out: *mut *mut AraIdeal) -> AraStatus {
    guard(|| {
        let out = unsafe { self::out(out, "out") }?;
        *out = Box::into_raw(Box::new(AraIdeal(lib(path_ideal(n, t))?)));
        Ok(AraStatus::Ok)
    })
}

/// Parses a monomial ideal such as `(x1*x2; x2*x3)`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_ideal_parse(text: *const c_char, out: *mut *mut AraIdeal) -> AraStatus {
    guard(|| {
        let text = unsafe { self::text(text, "text") }?;
        let out = unsafe { self::out(out, "out") }?;
        *out = Box::into_raw(Box::new(AraIdeal(lib(MonomialIdeal::parse(text, None))?)));
        Ok(AraStatus::Ok)
    })
}

/// # Safety
/// `ideal` must come from this library and not have been freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn ara_ideal_free(ideal: *mut AraIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_ideal_generator_count(ideal: *const AraIdeal, out: *mut usize) -> AraStatus {
    guard(|| {
        let ideal = unsafe { handle(ideal, "ideal") }?;
        *unsafe { self::out(out, "out") }? = ideal.0.len();
        Ok(AraStatus::Ok)
    })
}

/// The ideal in text form, e.g. `x1*x2; x2*x3`.
///
/// # Safety
/// `ideal` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_ideal_to_string(ideal: *const AraIdeal, out: *mut *mut c_char) -> AraStatus {
    guard(|| {
        let ideal = unsafe { handle(ideal, "ideal") }?;
        *unsafe { self::out(out, "out") }? = c_string(ideal.0.to_string())?;
        Ok(AraStatus::Ok)
    })
}

/// `pd(R/I)` over GF(`p`). `cap` bounds the relevant variables; 0 means the
/// default.
///
/// # Safety
/// `ideal` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_projective_dimension(
    ideal: *const AraIdeal,
    p: u32,
    cap: usize,
    out: *mut usize,
) -> AraStatus {
    guard(|| {
        let ideal = unsafe { handle(ideal, "ideal") }?;
        let out = unsafe { self::out(out, "out") }?;
        let cap = if cap == 0 { DEFAULT_VARIABLE_CAP } else { cap };
        if cap > MAX_VARIABLE_CAP {
            return Err((AraStatus::InvalidArgument, format!("cap above {MAX_VARIABLE_CAP}")));
        }
        *out = lib(projective_dimension(&ideal.0, field(p)?, cap))?;
        Ok(AraStatus::Ok)
    })
}

/// Builds the certificate for `(n, t)` over GF(`p`) from the builtin pairs.
/// Returns `Degraded` (no pair for `t`) or `ResourceLimit` (a check ran out
/// of budget) with `*out` still set; on any other failure `*out` is null.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_construct(
    n: u32,
    t: u32,
    p: u32,
    verify: AraVerify,
    out: *mut *mut AraCertificate,
) -> AraStatus {
    guard(|| {
        let out = unsafe { self::out(out, "out") }?;
        *out = ptr::null_mut();
        let options = CertificateOptions {
            verify: match verify {
                AraVerify::Auto => VerifyPolicy::Auto,
                AraVerify::Always => VerifyPolicy::Always,
                AraVerify::Never => VerifyPolicy::Never,
            },
            field: field(p)?,
            budget: Budget::from_env(),
            ..CertificateOptions::default()
        };
        let cert = lib(construct_certificate(n, t, &options))?;
        let status = match cert.status {
            CertificateStatus::Degraded => {
                set_error(format!("no block pair for t={t}; generators are the path monomials"));
                AraStatus::Degraded
            }
            CertificateStatus::BudgetExhausted => {
                set_error("a backward check exhausted its Groebner budget");
                AraStatus::ResourceLimit
            }
            _ => AraStatus::Ok,
        };
        *out = Box::into_raw(Box::new(AraCertificate(cert)));
        Ok(status)
    })
}

/// # Safety
/// `cert` must come from this library and not have been freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_free(cert: *mut AraCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_count(cert: *const AraCertificate, out: *mut usize) -> AraStatus {
    guard(|| {
        let cert = unsafe { handle(cert, "certificate") }?;
        *unsafe { self::out(out, "out") }? = cert.0.count();
        Ok(AraStatus::Ok)
    })
}

/// Generator `index` (from 0) in the polynomial text format.
///
/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_generator(
    cert: *const AraCertificate,
    index: usize,
    out: *mut *mut c_char,
) -> AraStatus {
    guard(|| {
        let cert = unsafe { handle(cert, "certificate") }?;
        let out = unsafe { self::out(out, "out") }?;
        let g = cert.0.generators.get(index).ok_or_else(|| {
            (
                AraStatus::InvalidArgument,
                format!("index {index} out of {} generators", cert.0.count()),
            )
        })?;
        *out = c_string(g.to_string())?;
        Ok(AraStatus::Ok)
    })
}

/// `pd(R/I_t(L_n))`, or -1 when `n` was above the enumeration cap.
///
/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_pd(cert: *const AraCertificate, out: *mut i64) -> AraStatus {
    guard(|| {
        let cert = unsafe { handle(cert, "certificate") }?;
        *unsafe { self::out(out, "out") }? = cert.0.pd_value.map_or(-1, |v| v as i64);
        Ok(AraStatus::Ok)
    })
}

/// Whether the radical-equality certification ran and passed.
///
/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_verified(cert: *const AraCertificate, out: *mut bool) -> AraStatus {
    guard(|| {
        let cert = unsafe { handle(cert, "certificate") }?;
        *unsafe { self::out(out, "out") }? = cert.0.status == CertificateStatus::Verified;
        Ok(AraStatus::Ok)
    })
}

/// The certificate in the same JSON shape the command line emits.
///
/// # Safety
/// `cert` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_certificate_to_json(cert: *const AraCertificate, out: *mut *mut c_char) -> AraStatus {
    guard(|| {
        let cert = unsafe { handle(cert, "certificate") }?;
        let out = unsafe { self::out(out, "out") }?;
        let json = serde_json::to_string(&CertificateJson::from(&cert.0))
            .map_err(|e| (AraStatus::InvalidArgument, e.to_string()))?;
        *out = c_string(json)?;
        Ok(AraStatus::Ok)
    })
}

/// Certifies `sqrt(gens) = ideal` over GF(`p`). `gens` separates polynomials
/// with `|`, `;` or newlines. Returns `VerificationFailed` when a check
/// fails and `ResourceLimit` when one ran out of budget; the transcript is
/// written to `transcript` (if non-null) in both cases.
///
/// # Safety
/// `gens` and `ideal` must be NUL-terminated strings; `transcript` is null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ara_verify(
    gens: *const c_char,
    ideal: *const c_char,
    p: u32,
    transcript: *mut *mut c_char,
) -> AraStatus {
    guard(|| {
        let gens = unsafe { text(gens, "gens") }?;
        let ideal = unsafe { text(ideal, "ideal") }?;
        if !transcript.is_null() {
            unsafe { *transcript = ptr::null_mut() };
        }
        let report = lib(verify_text(gens, ideal, field(p)?, Budget::from_env()))?;
        if !transcript.is_null() {
            unsafe { *transcript = c_string(report.to_string())? };
        }
        Ok(if report.failures().next().is_some() {
            set_error("radical equality fails");
            AraStatus::VerificationFailed
        } else if report.budget_exhausted() {
            set_error("a backward check exhausted its Groebner budget");
            AraStatus::ResourceLimit
        } else {
            AraStatus::Ok
        })
    })
}
