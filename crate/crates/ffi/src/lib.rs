//! C ABI for parsing codes, computing enumerators and evaluating distillation maps.
//!
//! Every fallible call returns an [`M3Status`]; on failure the message is kept
//! per thread and read back with [`m3_last_error`]. Handles are opaque and
//! owned by the caller until passed to the matching `*_free`.

use m3enum::distill::{build_map_with, DistillMap, LogicalSign, NoiseExponent, Threshold};
use m3enum::gf4core::{parse_code, Gf4Error};
use m3enum::rational::to_f64;
use m3enum::{Enumerator, Gf4Code};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M3Status {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Math = 3,
    Budget = 4,
    Utf8 = 5,
    /// The requested quantity does not exist, e.g. a map without a threshold.
    NotFound = 6,
    OutOfRange = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M3Sign {
    Plus = 0,
    Minus = 1,
}

pub struct M3Code(Gf4Code);
pub struct M3Enumerator(Enumerator);
pub struct M3Map(DistillMap);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: M3Status, msg: impl ToString) -> M3Status {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

fn gf4_status(e: &Gf4Error) -> M3Status {
    match e {
        Gf4Error::BudgetExceeded { .. } => M3Status::Budget,
        Gf4Error::IndexOutOfRange { .. } => M3Status::OutOfRange,
        _ => M3Status::Math,
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, M3Status> {
    if s.is_null() {
        return Err(fail(M3Status::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(M3Status::Utf8, e))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> M3Status {
    *out = Box::into_raw(Box::new(value));
    M3Status::Ok
}

macro_rules! check_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(M3Status::NullPointer, "null argument");
        }
    };
}

/// Message for the last failed call on this thread. Valid until the next failure.
#[no_mangle]
pub extern "C" fn m3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn m3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an `n k` header followed by `k` generator rows.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_code_parse(src: *const c_char, out: *mut *mut M3Code) -> M3Status {
    check_null!(out);
    let src = match text(src) {
        Ok(s) => s,
        Err(s) => return s,
    };
    match parse_code(src) {
        Ok(c) => put(out, M3Code(c)),
        Err(e) => fail(M3Status::Parse, e),
    }
}

/// # Safety
/// `code` must come from [`m3_code_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn m3_code_free(code: *mut M3Code) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Code length, 0 for null.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn m3_code_length(code: *const M3Code) -> usize {
    code.as_ref().map_or(0, |c| c.0.n())
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_code_shorten(code: *const M3Code, coord: usize, out: *mut *mut M3Code) -> M3Status {
    check_null!(code, out);
    match (*code).0.shorten(coord) {
        Ok(c) => put(out, M3Code(c)),
        Err(e) => fail(gf4_status(&e), e),
    }
}

/// Weight enumerator by enumerating at most `4^budget` codewords.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_code_enumerator(code: *const M3Code, budget: u32, out: *mut *mut M3Enumerator) -> M3Status {
    check_null!(code, out);
    match (*code).0.weight_enumerator(budget) {
        Ok(a) => put(out, M3Enumerator(a)),
        Err(e) => fail(gf4_status(&e), e),
    }
}

/// Reads `{"n": .., "coeffs": [..]}`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_enumerator_from_json(src: *const c_char, out: *mut *mut M3Enumerator) -> M3Status {
    check_null!(out);
    let src = match text(src) {
        Ok(s) => s,
        Err(s) => return s,
    };
    let value = match serde_json::from_str(src) {
        Ok(v) => v,
        Err(e) => return fail(M3Status::Parse, e),
    };
    match Enumerator::from_json(&value) {
        Ok(a) => put(out, M3Enumerator(a)),
        Err(e) => fail(M3Status::Parse, e),
    }
}

/// JSON with exact coefficients; free with [`m3_string_free`]. Null on null input.
///
/// # Safety
/// `e` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn m3_enumerator_to_json(e: *const M3Enumerator) -> *mut c_char {
    match e.as_ref() {
        Some(e) => CString::new(e.0.to_json().to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `e` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn m3_enumerator_degree(e: *const M3Enumerator) -> usize {
    e.as_ref().map_or(0, |e| e.0.n())
}

/// Coefficient of `y^j` as a double.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_enumerator_coeff(e: *const M3Enumerator, j: usize, out: *mut f64) -> M3Status {
    check_null!(e, out);
    let e = &(*e).0;
    if j > e.n() {
        return fail(M3Status::OutOfRange, format!("degree is {}, asked for {j}", e.n()));
    }
    *out = to_f64(&e.coeffs()[j]);
    M3Status::Ok
}

/// # Safety
/// `e` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn m3_enumerator_free(e: *mut M3Enumerator) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Distillation map of an `[[n, 1]]` stabilizer enumerator.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_map_build(e: *const M3Enumerator, sign: M3Sign, out: *mut *mut M3Map) -> M3Status {
    check_null!(e, out);
    let sign = match sign {
        M3Sign::Plus => LogicalSign::Plus,
        M3Sign::Minus => LogicalSign::Minus,
    };
    match build_map_with(&(*e).0, sign) {
        Ok(m) => put(out, M3Map(m)),
        Err(err) => fail(M3Status::Math, err),
    }
}

/// # Safety
/// `map` must come from [`m3_map_build`] or be null.
#[no_mangle]
pub unsafe extern "C" fn m3_map_free(map: *mut M3Map) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Output error rate for input `eps` in `[0, 1/2]`.
///
/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_map_eps_out(map: *const M3Map, eps: f64, out: *mut f64) -> M3Status {
    check_null!(map, out);
    if !(0.0..=0.5).contains(&eps) {
        return fail(M3Status::OutOfRange, format!("eps = {eps} outside [0, 1/2]"));
    }
    *out = (*map).0.eps_out_f64(eps);
    M3Status::Ok
}

/// Largest attracting fixed point below `ε_max`; `NotFound` when there is none.
///
/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_map_threshold(map: *const M3Map, out: *mut f64) -> M3Status {
    check_null!(map, out);
    match (*map).0.threshold() {
        Threshold::Found(r) => {
            *out = to_f64(&r.estimate());
            M3Status::Ok
        }
        Threshold::None => fail(M3Status::NotFound, "no threshold"),
    }
}

/// Noise exponent `ν` and leading coefficient of `ε_out ~ c ε^ν`.
///
/// # Safety
/// `map` must be a live handle; `nu` and `leading` writable.
#[no_mangle]
pub unsafe extern "C" fn m3_map_noise_exponent(map: *const M3Map, nu: *mut u32, leading: *mut f64) -> M3Status {
    check_null!(map, nu, leading);
    match (*map).0.noise_exponent() {
        NoiseExponent::Defined { nu: v, leading: c } => {
            *nu = v as u32;
            *leading = to_f64(&c);
            M3Status::Ok
        }
        NoiseExponent::Useless => fail(M3Status::NotFound, "output error does not vanish at eps = 0"),
        NoiseExponent::Perfect => fail(M3Status::NotFound, "output error vanishes identically"),
    }
}
