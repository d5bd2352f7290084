use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cayley_spectra_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cs_string_free(s) };
    owned
}

fn last_error() -> String {
    take(cs_last_error())
}

#[test]
fn lambda2_roundtrip() {
    let (mut value, mut witnesses) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { cs_lambda2(6, 2, &mut value, &mut witnesses) }, CsStatus::Ok);
    assert_eq!(take(value), "18");
    assert_eq!(take(witnesses), "[5,1] [2,2,2]");
}

#[test]
fn character_and_closed_form() {
    let mut out = ptr::null_mut();
    let (p, t) = (CString::new("3,2").unwrap(), CString::new("3,1^2").unwrap());
    assert_eq!(unsafe { cs_character(p.as_ptr(), t.as_ptr(), &mut out) }, CsStatus::Ok);
    assert_eq!(take(out), "-1");

    let shape = CString::new("n-1,1").unwrap();
    assert_eq!(unsafe { cs_closed_form(shape.as_ptr(), 8, 3, &mut out) }, CsStatus::Ok);
    assert_eq!(take(out), "384");
}

#[test]
fn errors_set_status_and_message() {
    let mut out = ptr::null_mut();
    let (bad, t) = (CString::new("2,3").unwrap(), CString::new("5").unwrap());
    assert_eq!(unsafe { cs_character(bad.as_ptr(), t.as_ptr(), &mut out) }, CsStatus::InvalidArgument);
    assert!(out.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(unsafe { cs_character(ptr::null(), t.as_ptr(), &mut out) }, CsStatus::NullPointer);
    assert_eq!(last_error(), "partition is NULL");

    let mut spectrum = ptr::null_mut();
    assert_eq!(unsafe { cs_spectrum_new(15, 2, &mut spectrum) }, CsStatus::SizeLimit);
    assert_eq!(unsafe { cs_spectrum_new(5, 4, &mut spectrum) }, CsStatus::OutOfRange);
    assert!(spectrum.is_null());

    let mut flags = CsHypothesisFlags::default();
    assert_eq!(unsafe { cs_hypothesis(4, 3, &mut flags) }, CsStatus::OutOfRange);
}

#[test]
fn spectrum_handle() {
    let mut spectrum = ptr::null_mut();
    assert_eq!(unsafe { cs_spectrum_new(4, 1, &mut spectrum) }, CsStatus::Ok);
    let len = unsafe { cs_spectrum_len(spectrum) };
    assert_eq!(len, 5);
    let mut rows = Vec::new();
    for i in 0..len {
        let (mut p, mut e, mut m) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(unsafe { cs_spectrum_entry(spectrum, i, &mut p, &mut e, &mut m) }, CsStatus::Ok);
        rows.push((take(p), take(e), take(m)));
    }
    assert_eq!(rows[4], ("2,2".to_string(), "-4".to_string(), "4".to_string()));
    let (mut p, mut e, mut m) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { cs_spectrum_entry(spectrum, len, &mut p, &mut e, &mut m) }, CsStatus::OutOfRange);
    let json: serde_json::Value = serde_json::from_str(&take(unsafe { cs_spectrum_to_json(spectrum) })).unwrap();
    assert_eq!(json["valency"], "8");
    unsafe { cs_spectrum_free(spectrum) };
    unsafe { cs_spectrum_free(ptr::null_mut()) };
    assert_eq!(unsafe { cs_spectrum_len(ptr::null()) }, 0);
}

#[test]
fn hypothesis_flags() {
    let mut flags = CsHypothesisFlags::default();
    assert_eq!(unsafe { cs_hypothesis(20, 4, &mut flags) }, CsStatus::Ok);
    assert!(flags.in_main_theorem_range && flags.unique_rimhook_range && flags.sqrtkfact_bound_holds);
}

#[test]
fn certification_handle() {
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cs_certification_run(1e-9, 0x5EED, 500, &mut report) }, CsStatus::Ok);
    assert!(unsafe { cs_certification_passed(report) });
    assert_eq!(unsafe { cs_certification_len(report) }, 5);
    let mut rec = CsCertificationRecord::default();
    assert_eq!(unsafe { cs_certification_record(report, 4, &mut rec) }, CsStatus::Ok);
    assert_eq!((rec.k, rec.valency, rec.rhs_exact), (4, 96, 72));
    assert!((rec.lambda2_numeric - 72.0).abs() < 1e-6 && rec.pass);
    assert_eq!(unsafe { cs_certification_record(report, 5, &mut rec) }, CsStatus::OutOfRange);
    assert!(take(unsafe { cs_certification_to_json(report) }).contains("\"all_pass\": true"));
    unsafe { cs_certification_free(report) };

    assert_eq!(unsafe { cs_certification_run(0.0, 1, 10, &mut report) }, CsStatus::OutOfRange);
}

#[test]
fn header_is_current_and_c_program_links() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(crate_dir.join("include/cayley_spectra.h")).unwrap();
    for symbol in ["cs_lambda2", "cs_spectrum_new", "cs_certification_record", "CS_STATUS_OUT_OF_RANGE"] {
        assert!(header.contains(symbol), "{symbol} missing from header");
    }

    // The static library sits next to the deps directory holding this test.
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libcayley_spectra_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = profile_dir.join("cayley_spectra_c_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let output = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(output.status.success(), "{stdout}");
    assert!(!stdout.contains("FAIL"));
}
