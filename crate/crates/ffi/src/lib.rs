//! C ABI for `brt-knot`.
//!
//! Diagrams live behind an opaque `BrtDiagram` handle. Every call returns a
//! [`BrtStatus`]; on failure [`brt_last_error`] describes the problem for
//! the calling thread. Results that carry polynomials come back as JSON
//! strings owned by the library and released with [`brt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brt_knot::bracket::{bracket_statesum, bracket_via_brt, jones_from_bracket};
use brt_knot::brt::{brt, Method};
use brt_knot::cli::{analysis_record, stringify_numbers};
use brt_knot::diagram::{parse_braid, parse_pd, PlanarDiagram};
use brt_knot::error::Error;
use brt_knot::state_graph::all_a;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrtStatus {
    Ok = 0,
    /// Malformed PD code, braid word or ribbon data.
    ParseError = 1,
    /// Disconnected diagram, size cap exceeded or similar.
    Precondition = 2,
    /// An internal consistency check failed.
    Postcondition = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// BRT evaluation strategy.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrtMethod {
    Recursive = 0,
    Subgraph = 1,
    Tree = 2,
}

/// Opaque diagram handle.
pub struct BrtDiagram {
    inner: PlanarDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> BrtStatus {
    match e.exit_code() {
        1 => BrtStatus::ParseError,
        3 => BrtStatus::Postcondition,
        _ => BrtStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (BrtStatus, String)>) -> BrtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BrtStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BrtStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (BrtStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (BrtStatus, String)> {
    if s.is_null() {
        return Err((BrtStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (BrtStatus::InvalidUtf8, e.to_string()))
}

unsafe fn diagram<'a>(d: *const BrtDiagram) -> Result<&'a PlanarDiagram, (BrtStatus, String)> {
    d.as_ref().map(|h| &h.inner).ok_or((BrtStatus::NullPointer, "null diagram handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (BrtStatus, String)> {
    if out.is_null() {
        return Err((BrtStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_json(out: *mut *mut c_char, v: serde_json::Value) -> Result<(), (BrtStatus, String)> {
    let s = CString::new(stringify_numbers(v).to_string()).map_err(|e| (BrtStatus::Postcondition, e.to_string()))?;
    write_out(out, s.into_raw())
}

fn store(d: PlanarDiagram) -> *mut BrtDiagram {
    Box::into_raw(Box::new(BrtDiagram { inner: d }))
}

/// Parses a PD code such as `"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"`.
///
/// # Safety
/// `pd` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_diagram_from_pd(pd: *const c_char, out: *mut *mut BrtDiagram) -> BrtStatus {
    guard(|| {
        let d = parse_pd(read_str(pd)?).map_err(|e| lib_err(e.into()))?;
        write_out(out, store(d))
    })
}

/// Closes a braid word such as `"1 -2 1 -2"`; `strands` of 0 infers the count.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_diagram_from_braid(word: *const c_char, strands: usize, out: *mut *mut BrtDiagram) -> BrtStatus {
    guard(|| {
        let n = (strands > 0).then_some(strands);
        let d = parse_braid(read_str(word)?, n).map_err(|e| lib_err(e.into()))?;
        write_out(out, store(d))
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `d` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn brt_diagram_free(d: *mut BrtDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_diagram_crossings(d: *const BrtDiagram, out: *mut usize) -> BrtStatus {
    guard(|| write_out(out, diagram(d)?.crossing_count()))
}

/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_diagram_writhe(d: *const BrtDiagram, out: *mut i64) -> BrtStatus {
    guard(|| write_out(out, diagram(d)?.writhe()))
}

/// Kauffman bracket as JSON; `statesum` non-zero selects the state-sum oracle.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_bracket_json(d: *const BrtDiagram, statesum: i32, out: *mut *mut c_char) -> BrtStatus {
    guard(|| {
        let d = diagram(d)?;
        let b = if statesum != 0 { bracket_statesum(d) } else { bracket_via_brt(d) }.map_err(lib_err)?;
        write_json(out, serde_json::json!({ "terms": b.to_json_value(), "text": b.to_string() }))
    })
}

/// Jones polynomial as JSON (exponents in quarters of a power of t).
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_jones_json(d: *const BrtDiagram, out: *mut *mut c_char) -> BrtStatus {
    guard(|| {
        let d = diagram(d)?;
        let v = bracket_via_brt(d).and_then(|b| jones_from_bracket(d, &b)).map_err(lib_err)?;
        write_json(out, serde_json::json!({ "terms": v.to_json_value(), "text": v.to_string() }))
    })
}

/// BRT polynomial of the all-A ribbon graph as JSON; `method` is one of
/// the `BrtMethod` values.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_polynomial_json(d: *const BrtDiagram, method: u32, out: *mut *mut c_char) -> BrtStatus {
    guard(|| {
        let m = match method {
            x if x == BrtMethod::Recursive as u32 => Method::Recursive,
            x if x == BrtMethod::Subgraph as u32 => Method::Subgraph,
            x if x == BrtMethod::Tree as u32 => Method::Tree,
            other => return Err((BrtStatus::ParseError, format!("unknown method {other}"))),
        };
        let g = all_a(diagram(d)?).map_err(lib_err)?;
        let c = brt(&g, m, None).map_err(lib_err)?;
        write_json(out, serde_json::json!({ "terms": c.to_json_value(), "text": c.to_string() }))
    })
}

/// Jones polynomial, adequacy, span bounds and genus data in one record.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn brt_analysis_json(d: *const BrtDiagram, out: *mut *mut c_char) -> BrtStatus {
    guard(|| {
        let v = analysis_record(diagram(d)?).map_err(lib_err)?;
        write_json(out, v)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn brt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn brt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
