//! C ABI over `tucker_volume`. Objects are opaque handles released with the
//! matching `*_free`; strings returned to the caller are released with
//! `tv_string_free`. Every fallible call returns a `TvStatus` and leaves a
//! message for `tv_last_error_message` on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tucker_volume::build::{RefinementScheme, RefinementSpec};
use tucker_volume::instance::InstanceFile;
use tucker_volume::label::LabelKind;
use tucker_volume::verify::{check_instance, generate_instance, EnclosureKind, LabelGenerator, Report};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvStatus {
    Ok = 0,
    /// The call succeeded but at least one check failed.
    CheckFailed = 1,
    InvalidInput = 2,
    NullPointer = 3,
    /// A panic was caught at the boundary.
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvEnclosure {
    Shell = 0,
    Square2d = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvScheme {
    Barycentric = 0,
    EdgeMidpoint = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TvMode {
    Tucker = 0,
    Sperner = 1,
}

/// A labeled triangulation.
pub struct TvInstance {
    inner: InstanceFile,
}

/// The outcome of checking an instance.
pub struct TvReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn guard(f: impl FnOnce() -> TvStatus) -> TvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            TvStatus::Internal
        }
    }
}

fn fail(status: TvStatus, msg: impl Into<String>) -> TvStatus {
    set_error(msg);
    status
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TvStatus> {
    if s.is_null() {
        return Err(fail(TvStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(TvStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TvStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TvStatus::Ok
        }
        Err(_) => fail(TvStatus::Internal, "output contains a NUL byte"),
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn tv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn tv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an instance file from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_instance_from_json(json: *const c_char, out: *mut *mut TvInstance) -> TvStatus {
    guard(|| {
        if out.is_null() {
            return fail(TvStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match InstanceFile::from_json(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(TvInstance { inner }));
                TvStatus::Ok
            }
            Err(e) => fail(TvStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Generates a random instance, as `tucker-volume gen` does with uniform
/// Tucker labels.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_instance_generate(
    dim: u32,
    seed: u64,
    rounds: u32,
    scheme: TvScheme,
    mode: TvMode,
    out: *mut *mut TvInstance,
) -> TvStatus {
    guard(|| {
        if out.is_null() {
            return fail(TvStatus::NullPointer, "null output pointer");
        }
        let scheme = match scheme {
            TvScheme::Barycentric => RefinementScheme::Barycentric,
            TvScheme::EdgeMidpoint => RefinementScheme::EdgeMidpoint,
        };
        let mode = match mode {
            TvMode::Tucker => LabelKind::Tucker,
            TvMode::Sperner => LabelKind::Sperner,
        };
        let spec = RefinementSpec::new(scheme, rounds);
        match generate_instance(dim as usize, seed, &spec, mode, LabelGenerator::Uniform) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(TvInstance { inner }));
                TvStatus::Ok
            }
            Err(e) => fail(TvStatus::InvalidInput, e.to_string()),
        }
    })
}

/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_instance_to_json(inst: *const TvInstance, out: *mut *mut c_char) -> TvStatus {
    guard(|| {
        let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
            return fail(TvStatus::NullPointer, "null argument");
        };
        match inst.inner.to_json() {
            Ok(s) => write_string(out, s),
            Err(e) => fail(TvStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_instance_dimension(inst: *const TvInstance, out: *mut u32) -> TvStatus {
    guard(|| {
        let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
            return fail(TvStatus::NullPointer, "null argument");
        };
        *out = inst.inner.triangulation.dim() as u32;
        TvStatus::Ok
    })
}

/// # Safety
/// `inst` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn tv_instance_free(inst: *mut TvInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Runs every check. A report is written to `out` whenever the status is
/// `Ok` or `CheckFailed`.
///
/// # Safety
/// `inst` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_check(inst: *const TvInstance, enclosure: TvEnclosure, out: *mut *mut TvReport) -> TvStatus {
    guard(|| {
        let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
            return fail(TvStatus::NullPointer, "null argument");
        };
        let enclosure = match enclosure {
            TvEnclosure::Shell => EnclosureKind::Shell,
            TvEnclosure::Square2d => EnclosureKind::Square2d,
        };
        let inner = check_instance(&inst.inner, enclosure);
        let status = if inner.passed() {
            TvStatus::Ok
        } else {
            let why = inner.first_failure().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
            fail(TvStatus::CheckFailed, why.unwrap_or_default())
        };
        *out = Box::into_raw(Box::new(TvReport { inner }));
        status
    })
}

/// 1 if no check failed, 0 otherwise (including NULL).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tv_report_passed(report: *const TvReport) -> i32 {
    report.as_ref().is_some_and(|r| r.inner.passed()) as i32
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tv_report_complementary_edge_count(report: *const TvReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.complementary_edges.len())
}

/// Degree of the boundary map; `InvalidInput` when it was not computed.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_report_degree(report: *const TvReport, out: *mut i64) -> TvStatus {
    guard(|| {
        let (Some(r), false) = (report.as_ref(), out.is_null()) else {
            return fail(TvStatus::NullPointer, "null argument");
        };
        match &r.inner.degree {
            Some(d) => {
                *out = d.degree;
                TvStatus::Ok
            }
            None => fail(TvStatus::InvalidInput, "degree not computed for this instance"),
        }
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tv_report_to_json(report: *const TvReport, out: *mut *mut c_char) -> TvStatus {
    guard(|| {
        let (Some(r), false) = (report.as_ref(), out.is_null()) else {
            return fail(TvStatus::NullPointer, "null argument");
        };
        match r.inner.to_json() {
            Ok(s) => write_string(out, s),
            Err(e) => fail(TvStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `report` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn tv_report_free(report: *mut TvReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
