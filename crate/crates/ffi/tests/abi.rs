use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hermgf_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = hg_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_str().unwrap().to_owned()
}

#[test]
fn hermite_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hg_hermite(b'H' as c_char, 3, &mut p), HgStatus::Ok);
        assert_eq!(take_string(hg_polynomial_to_string(p)), "8*u^3 - 12*u");
        let mut c = ptr::null_mut();
        assert_eq!(hg_polynomial_coefficient(p, 1, 0, &mut c), HgStatus::Ok);
        assert_eq!(take_string(c), "-12");
        hg_polynomial_free(p);
    }
}

#[test]
fn bad_arguments() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hg_hermite(b'q' as c_char, 3, &mut p), HgStatus::InvalidArgument);
        assert!(p.is_null());
        assert_eq!(hg_hermite(b'h' as c_char, 3, ptr::null_mut()), HgStatus::NullPointer);
        assert_eq!(hg_verify(ptr::null(), 3, &mut ptr::null_mut()), HgStatus::NullPointer);

        let name = CString::new("no-such-identity").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(hg_verify(name.as_ptr(), 3, &mut r), HgStatus::UnknownName);
        assert!(last_error().contains("no-such-identity"));

        let mut count = 0;
        assert_eq!(hg_w_tree_count(9, &mut count), HgStatus::BoundExceeded);
        let mut m = ptr::null_mut();
        assert_eq!(hg_matching_census(40, &mut m), HgStatus::BoundExceeded);

        // freeing NULL is a no-op
        hg_polynomial_free(ptr::null_mut());
        hg_series_free(ptr::null_mut());
        hg_report_free(ptr::null_mut());
        hg_string_free(ptr::null_mut());
        assert!(hg_polynomial_to_string(ptr::null()).is_null());
        assert_eq!(hg_series_order(ptr::null()), 0);
        assert!(!hg_report_is_verified(ptr::null()));
    }
}

#[test]
fn verify_reports() {
    unsafe {
        for name in ["main", "doetsch", "hypergeom", "dT-du"] {
            let c = CString::new(name).unwrap();
            let mut r = ptr::null_mut();
            assert_eq!(hg_verify(c.as_ptr(), 6, &mut r), HgStatus::Ok);
            assert!(hg_report_is_verified(r), "{name}");
            let json: serde_json::Value = serde_json::from_str(&take_string(hg_report_to_json(r))).unwrap();
            assert_eq!(json["identity"], name);
            assert_eq!(json["order"], 6);
            assert_eq!(json["status"], "verified");
            assert!(json["mismatch"].is_null());
            hg_report_free(r);
        }
    }
}

#[test]
fn series_coefficients() {
    unsafe {
        let name = CString::new("w").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(hg_expand(name.as_ptr(), 5, &mut s), HgStatus::Ok);
        assert_eq!(hg_series_order(s), 5);
        let expected = ["u", "3*u^2", "18*u^3", "135*u^4", "1134*u^5"];
        for (n, text) in expected.iter().enumerate() {
            let mut p = ptr::null_mut();
            assert_eq!(hg_series_coefficient(s, n as u32, &mut p), HgStatus::Ok);
            assert_eq!(take_string(hg_polynomial_to_string(p)), *text);
            hg_polynomial_free(p);
        }
        let mut p = ptr::null_mut();
        assert_eq!(hg_series_coefficient(s, 6, &mut p), HgStatus::InvalidArgument);
        hg_series_free(s);

        let bad = CString::new("v").unwrap();
        assert_eq!(hg_expand(bad.as_ptr(), 5, &mut s), HgStatus::UnknownName);
    }
}

#[test]
fn oracles() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(hg_matching_census(6, &mut m), HgStatus::Ok);
        assert_eq!(
            take_string(hg_polynomial_to_string(m)),
            "u^6 + 15*u^4 + 45*u^2 + 15"
        );
        hg_polynomial_free(m);

        let mut count = 0;
        assert_eq!(hg_w_tree_count(2, &mut count), HgStatus::Ok);
        assert_eq!(count, 36);

        let mut json = ptr::null_mut();
        assert_eq!(hg_census_check_json(2, &mut json), HgStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["checks"].as_array().unwrap().len(), 12);
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

/// Compiles the C example against the generated header and static library.
#[test]
fn c_smoke() {
    let lib = target_dir().join("libhermgf_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("hermgf_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C example failed to compile");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(
        run.status.success(),
        "{}{}",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("h_4 = u^4 + 6*u^2 + 3"));
}
