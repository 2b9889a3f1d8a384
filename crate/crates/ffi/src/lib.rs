//! C ABI over `rk-core`. Knots are opaque handles; results come back as
//! JSON strings owned by the caller and released with `rk_string_free`.
//! Every call returns an `RkStatus`; on failure `rk_last_error` describes
//! the most recent error on the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rk_core::knot::Fraction;
use rk_core::survey::Config;
use rk_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RkStatus {
    Ok = 0,
    InvalidInput = 1,
    Internal = 2,
    NullPointer = 3,
    Panic = 4,
}

/// A 2-bridge knot `K(p/q)`.
pub struct RkKnot {
    fraction: Fraction,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RkStatus {
    match e.exit_code() {
        1 => RkStatus::InvalidInput,
        _ => RkStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), RkStatus>) -> RkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside rk".into());
            RkStatus::Panic
        }
    }
}

fn lift<T>(r: rk_core::Result<T>) -> Result<T, RkStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn write_json<T: serde::Serialize>(out: *mut *mut c_char, value: &T) -> Result<(), RkStatus> {
    if out.is_null() {
        set_error("output pointer is null".into());
        return Err(RkStatus::NullPointer);
    }
    let text = serde_json::to_string(value).expect("serializable");
    *out = CString::new(text).expect("json has no nul").into_raw();
    Ok(())
}

unsafe fn knot_ref<'a>(knot: *const RkKnot) -> Result<&'a RkKnot, RkStatus> {
    knot.as_ref().ok_or_else(|| {
        set_error("knot handle is null".into());
        RkStatus::NullPointer
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Schema version of the JSON documents.
#[no_mangle]
pub extern "C" fn rk_schema_version() -> u32 {
    rk_core::SCHEMA_VERSION
}

/// Create `K(p/q)`. Requires `p` odd, `0 < q < p`, `gcd(p, q) = 1`.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_new(p: u64, q: u64, out: *mut *mut RkKnot) -> RkStatus {
    guard(|| {
        if out.is_null() {
            set_error("output pointer is null".into());
            return Err(RkStatus::NullPointer);
        }
        let fraction = lift(Fraction::new(p, q))?;
        *out = Box::into_raw(Box::new(RkKnot { fraction }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rk_knot_free(knot: *mut RkKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// Even continued fraction as JSON.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_continued_fraction(knot: *const RkKnot, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        write_json(out, &rk_core::knot::even_continued_fraction(k.fraction))
    })
}

/// Alexander polynomial in canonical text form `deg:coeff;...`, as a JSON
/// string.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_alexander(knot: *const RkKnot, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        let pres = lift(rk_core::knot::knot_presentation(k.fraction))?;
        let delta = lift(rk_core::knot::alexander_polynomial(&pres))?;
        write_json(out, &delta)
    })
}

/// Reduced twisted Alexander polynomial for a character of order `k`.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_twisted(knot: *const RkKnot, k: u64, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let h = knot_ref(knot)?;
        write_json(out, &lift(rk_core::metabelian::twisted_for_fraction(h.fraction, k))?)
    })
}

/// Casson-Gordon signatures; `p` must be a perfect square.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_cg(knot: *const RkKnot, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let h = knot_ref(knot)?;
        write_json(out, &lift(rk_core::cg::cg_report(h.fraction))?)
    })
}

/// Norm obstructions over all odd primes dividing `p`, scanning mod-r
/// tests up to `r_bound`.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_obstruct(knot: *const RkKnot, r_bound: u64, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let h = knot_ref(knot)?;
        write_json(out, &lift(rk_core::obstruction::sliceness_verdict(h.fraction, None, r_bound))?)
    })
}

/// Full pipeline report with default settings.
#[no_mangle]
pub unsafe extern "C" fn rk_knot_run(knot: *const RkKnot, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let h = knot_ref(knot)?;
        write_json(out, &lift(rk_core::survey::run_pipeline(h.fraction, &Config::default()))?)
    })
}

/// Survey row for determinant `m²`. `config` is key = value text or null.
#[no_mangle]
pub unsafe extern "C" fn rk_survey(m: u64, config: *const c_char, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let config = if config.is_null() {
            Config::default()
        } else {
            let text = CStr::from_ptr(config).to_str().map_err(|_| {
                set_error("config is not UTF-8".into());
                RkStatus::InvalidInput
            })?;
            lift(Config::parse(text))?
        };
        write_json(out, &lift(rk_core::survey::survey(m, &config))?)
    })
}
