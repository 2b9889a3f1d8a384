use std::ffi::{CStr, CString};
use std::ptr;

use rk_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    rk_string_free(s);
    v
}

unsafe fn knot(p: u64, q: u64) -> *mut RkKnot {
    let mut k = ptr::null_mut();
    assert_eq!(rk_knot_new(p, q, &mut k), RkStatus::Ok);
    k
}

#[test]
fn continued_fraction_and_alexander() {
    unsafe {
        let k = knot(225, 94);
        let mut out = ptr::null_mut();
        assert_eq!(rk_knot_continued_fraction(k, &mut out), RkStatus::Ok);
        assert_eq!(take(out)["terms"], serde_json::json!([2, 2, 2, -6, -2, 2]));
        assert_eq!(rk_knot_alexander(k, &mut out), RkStatus::Ok);
        assert_eq!(take(out), "0:3;1:-21;2:53;3:-71;4:53;5:-21;6:3");
        rk_knot_free(k);
    }
}

#[test]
fn invalid_input_sets_last_error() {
    unsafe {
        let mut k = ptr::null_mut();
        assert_eq!(rk_knot_new(10, 3, &mut k), RkStatus::InvalidInput);
        assert!(k.is_null());
        let msg = CStr::from_ptr(rk_last_error()).to_str().unwrap();
        assert!(msg.contains("even"), "{msg}");

        let k = knot(7, 2);
        let mut out = ptr::null_mut();
        assert_eq!(rk_knot_cg(k, &mut out), RkStatus::InvalidInput);
        assert_eq!(rk_knot_twisted(k, 5, &mut out), RkStatus::InvalidInput);
        assert_eq!(rk_knot_alexander(k, ptr::null_mut()), RkStatus::NullPointer);
        assert_eq!(rk_knot_alexander(ptr::null(), &mut out), RkStatus::NullPointer);
        rk_knot_free(k);
        rk_knot_free(ptr::null_mut());
        rk_string_free(ptr::null_mut());
    }
}

#[test]
fn twisted_cg_and_verdict() {
    unsafe {
        let k = knot(225, 94);
        let mut out = ptr::null_mut();
        assert_eq!(rk_knot_twisted(k, 5, &mut out), RkStatus::Ok);
        assert_eq!(take(out)["k"], 5);
        assert_eq!(rk_knot_cg(k, &mut out), RkStatus::Ok);
        let cg = take(out);
        assert_eq!(cg["all_prime_power_vanish"], true);
        assert_eq!(cg["some_composite_nonzero"], true);
        assert_eq!(rk_knot_run(k, &mut out), RkStatus::Ok);
        let run = take(out);
        assert_eq!(run["schema_version"], rk_schema_version());
        assert_eq!(run["verdict"], "not topologically slice (twisted Alexander, k=5)");
        rk_knot_free(k);
    }
}

#[test]
fn survey_with_config() {
    unsafe {
        let cfg = CString::new("r_bound = 50\njobs = 2\n").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(rk_survey(15, cfg.as_ptr(), &mut out), RkStatus::Ok);
        let row = take(out);
        assert_eq!((row["cg_fake"].as_u64(), row["alexander_norm"].as_u64()), (Some(2), Some(1)));
        let bad = CString::new("nonsense").unwrap();
        assert_eq!(rk_survey(15, bad.as_ptr(), &mut out), RkStatus::InvalidInput);
        assert_eq!(rk_survey(4, ptr::null(), &mut out), RkStatus::InvalidInput);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/rk.h");
    for name in [
        "rk_last_error",
        "rk_string_free",
        "rk_schema_version",
        "rk_knot_new",
        "rk_knot_free",
        "rk_knot_continued_fraction",
        "rk_knot_alexander",
        "rk_knot_twisted",
        "rk_knot_cg",
        "rk_knot_obstruct",
        "rk_knot_run",
        "rk_survey",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name}");
    }
    assert!(header.contains("typedef struct RkKnot RkKnot;"));
}
