use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use truncw_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    truncw_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(truncw_last_error()).to_str().unwrap().to_string()
}

#[test]
fn basis_coefficients() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(truncw_basis_new(2, &mut b), TruncwStatus::Ok);
        let mut s = ptr::null_mut();
        // p=2: M_1,-1 M_1,1 = -2 E22 has M_1,0 coefficient -1
        assert_eq!(truncw_basis_cg(b, 1, -1, 1, 1, 1, 0, &mut s), TruncwStatus::Ok);
        assert_eq!(take(s), "-1/1");
        assert_eq!(truncw_basis_cg(b, 3, 0, 1, 1, 1, 1, &mut s), TruncwStatus::OutOfRange);
        assert!(!last_error().is_empty());
        truncw_basis_free(b);
        assert_eq!(truncw_basis_new(0, &mut b), TruncwStatus::InvalidInput);
    }
}

#[test]
fn null_arguments() {
    unsafe {
        assert_eq!(truncw_basis_new(2, ptr::null_mut()), TruncwStatus::NullPointer);
        assert_eq!(truncw_rep_rtt_check(ptr::null()), TruncwStatus::NullPointer);
        let mut r = ptr::null_mut();
        assert_eq!(truncw_rep_new(2, ptr::null(), &mut r), TruncwStatus::NullPointer);
        truncw_string_free(ptr::null_mut());
        truncw_rep_free(ptr::null_mut());
    }
}

#[test]
fn representation_handle() {
    unsafe {
        let f = CString::new("1,0;1/2,-1/2").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(truncw_rep_new(2, f.as_ptr(), &mut r), TruncwStatus::Ok);
        let mut dim = 0;
        assert_eq!(truncw_rep_dim(r, &mut dim), TruncwStatus::Ok);
        assert_eq!(dim, 4);
        assert_eq!(truncw_rep_rtt_check(r), TruncwStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(truncw_rep_qdet(r, 1, &mut s), TruncwStatus::Ok);
        assert_eq!(take(s), "1/1");
        truncw_rep_free(r);
        let bad = CString::new("1,0,0").unwrap();
        assert_eq!(truncw_rep_new(2, bad.as_ptr(), &mut r), TruncwStatus::InvalidInput);
    }
}

#[test]
fn classify_and_verify() {
    unsafe {
        let input = CString::new(r#"{"P": [[0, 0, 1]]}"#).unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(truncw_classify_json(2, 1, input.as_ptr(), &mut s), TruncwStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["accepted"], false);
        assert_eq!(v["reason"], "degree 2 > p=1");
        let broken = CString::new("{").unwrap();
        assert_eq!(truncw_classify_json(2, 1, broken.as_ptr(), &mut s), TruncwStatus::InvalidInput);

        let suite = CString::new("identify").unwrap();
        assert_eq!(truncw_verify(2, 2, suite.as_ptr(), 0, &mut s), TruncwStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["schema"], "truncw/1");
        assert_eq!(v["passed"], true);
        let nope = CString::new("nope").unwrap();
        assert_eq!(truncw_verify(2, 2, nope.as_ptr(), 0, &mut s), TruncwStatus::InvalidInput);
        assert!(s.is_null());
    }
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/truncw.h");
    let src = std::env::temp_dir().join(format!("truncw_header_{}.c", std::process::id()));
    std::fs::write(&src, format!("#include \"{header}\"\nint main(void) {{ return TRUNCW_STATUS_OK; }}\n")).unwrap();
    let status = match std::process::Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg(&src).status() {
        Ok(s) => s,
        // no C compiler on this machine
        Err(_) => return,
    };
    std::fs::remove_file(&src).ok();
    assert!(status.success());
}
