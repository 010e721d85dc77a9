use std::ffi::{c_char, CStr, CString};
use std::ptr;

use equideg_ffi::*;

const BUNDLED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../equideg/models/six-membranes.json");

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { equideg_string_free(s) };
    out
}

fn last_error() -> String {
    let p = equideg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn load() -> *mut EquidegModel {
    let path = CString::new(BUNDLED).unwrap();
    let mut model = ptr::null_mut();
    assert_eq!(unsafe { equideg_model_load(path.as_ptr(), &mut model) }, EquidegStatus::Ok);
    model
}

#[test]
fn critical_points_through_handle() {
    let model = load();
    let mut count = 0;
    assert_eq!(unsafe { equideg_critical_point_count(model, &mut count) }, EquidegStatus::Ok);
    assert_eq!(count, 5);
    let (mut n, mut m, mut j, mut alpha) = (0, 0, 0, 0.0);
    assert_eq!(unsafe { equideg_critical_point(model, 0, &mut n, &mut m, &mut j, &mut alpha) }, EquidegStatus::Ok);
    assert_eq!((n, m, j), (1, 3, 2));
    assert!(alpha.is_finite());
    assert_eq!(
        unsafe { equideg_critical_point(model, count, &mut n, &mut m, &mut j, &mut alpha) },
        EquidegStatus::ConfigError
    );
    assert!(last_error().contains("out of range"));
    unsafe { equideg_model_free(model) };
}

#[test]
fn degrees_and_invariants_as_json() {
    let model = load();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { equideg_basic_degree_json(model, 1, 0, &mut s) }, EquidegStatus::Ok);
    let terms: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(terms.as_array().unwrap().len(), 2);
    assert_eq!(unsafe { equideg_invariant_json(model, 1, 3, 2, false, &mut s) }, EquidegStatus::Ok);
    let terms: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert!(!terms.as_array().unwrap().is_empty());
    assert_eq!(unsafe { equideg_invariant_json(model, 1, 0, 0, false, &mut s) }, EquidegStatus::ConfigError);
    assert!(last_error().contains("not a critical point"));
    unsafe { equideg_model_free(model) };
}

#[test]
fn report_matches_library() {
    let model = load();
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { equideg_report_run(model, &mut report) }, EquidegStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { equideg_report_json(report, &mut s) }, EquidegStatus::Ok);
    let direct = equideg::model_io::run_report(&equideg::model_io::load_model(BUNDLED).unwrap()).unwrap();
    assert_eq!(take(s), direct.to_json());
    unsafe {
        equideg_report_free(report);
        equideg_model_free(model);
    }
}

#[test]
fn error_codes() {
    let mut model = ptr::null_mut();
    assert_eq!(unsafe { equideg_model_load(ptr::null(), &mut model) }, EquidegStatus::NullArgument);
    let missing = CString::new("/nonexistent.json").unwrap();
    assert_eq!(unsafe { equideg_model_load(missing.as_ptr(), &mut model) }, EquidegStatus::ConfigError);
    assert!(model.is_null());
    let bad = CString::new("{ not json").unwrap();
    assert_eq!(unsafe { equideg_model_from_json(bad.as_ptr(), &mut model) }, EquidegStatus::ConfigError);
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { equideg_model_from_json(invalid.as_ptr().cast(), &mut model) },
        EquidegStatus::InvalidUtf8
    );
    let mut x = 0.0;
    assert_eq!(unsafe { equideg_bessel_zero_sq(0, 0, &mut x) }, EquidegStatus::ConfigError);
    assert_eq!(unsafe { equideg_bessel_zero_sq(0, 1, &mut x) }, EquidegStatus::Ok);
    assert!((x - 5.783185962946784).abs() < 1e-12);
    unsafe {
        equideg_model_free(ptr::null_mut());
        equideg_report_free(ptr::null_mut());
        equideg_string_free(ptr::null_mut());
    }
}

#[test]
fn from_json_and_coincident_curves() {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(BUNDLED).unwrap()).unwrap();
    v["linearization"]["coupling"]["d"] = serde_json::json!(0.0);
    let json = CString::new(v.to_string()).unwrap();
    let mut model = ptr::null_mut();
    assert_eq!(unsafe { equideg_model_from_json(json.as_ptr(), &mut model) }, EquidegStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { equideg_invariant_json(model, 1, 3, 0, true, &mut s) }, EquidegStatus::ComputationError);
    unsafe { equideg_model_free(model) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/equideg.h")).unwrap();
    for f in [
        "equideg_last_error",
        "equideg_string_free",
        "equideg_model_load",
        "equideg_model_from_json",
        "equideg_model_free",
        "equideg_critical_point_count",
        "equideg_critical_point",
        "equideg_basic_degree_json",
        "equideg_invariant_json",
        "equideg_report_run",
        "equideg_report_free",
        "equideg_report_json",
        "equideg_bessel_zero_sq",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing");
    }
    assert!(header.contains("typedef struct EquidegModel EquidegModel;"));
    assert!(header.contains("EQUIDEG_STATUS_COMPUTATION_ERROR = 3"));
}
