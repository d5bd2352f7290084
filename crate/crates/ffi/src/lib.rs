//! C ABI over `cayley_spectra`.
//!
//! Every fallible function returns a [`CsStatus`]; on failure the message is
//! available from [`cs_last_error`] on the same thread. Strings handed out by
//! the library are owned by the caller and must be released with
//! [`cs_string_free`]. Handles are opaque and released with their own
//! `*_free` function; passing NULL to any `*_free` is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use cayley_spectra::charmn::{mn_character, CycleType};
use cayley_spectra::eigensolve::{verify_recursive_5cycles, CertificationConfig, CertificationReport};
use cayley_spectra::permgroup::NeighborStrategy;
use cayley_spectra::spectra::{
    closed_form_table1, full_spectrum, hypothesis_check, Spectrum, SecondEigenvalue, Table1Shape,
};
use cayley_spectra::young::Partition;
use cayley_spectra::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    SizeLimit = 4,
    VerificationFailed = 5,
    Internal = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CsStatus {
    match err {
        Error::OutOfRange(_) => CsStatus::OutOfRange,
        Error::SizeLimit { .. } => CsStatus::SizeLimit,
        Error::Internal(_) | Error::NonIntegral(_) | Error::NotSymmetric(_) => CsStatus::Internal,
        _ => CsStatus::InvalidArgument,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
    Other(CsStatus, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(body: impl FnOnce() -> Result<CsStatus, Failure> + UnwindSafe) -> CsStatus {
    match catch_unwind(body) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is NULL"));
            CsStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Other(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside cayley_spectra".into());
            CsStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Other(CsStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no NUL").into_raw()
}

/// The most recent error message on this thread, or NULL. Free with
/// [`cs_string_free`].
#[no_mangle]
pub extern "C" fn cs_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static; do not free.
#[no_mangle]
pub extern "C" fn cs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `χ^λ(τ)` as a decimal string in `*out`.
///
/// # Safety
/// `partition` and `cycle_type` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_character(
    partition: *const c_char,
    cycle_type: *const c_char,
    out: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let lambda: Partition = read_str(partition, "partition")?.parse()?;
        let tau: CycleType = read_str(cycle_type, "cycle_type")?.parse()?;
        let value = mn_character(&lambda, &tau)?;
        write_out(out, to_c(value.to_string()), "out")?;
        Ok(CsStatus::Ok)
    })
}

/// Second eigenvalue of `Γ(n,k)` in `*value`, and the partitions affording
/// it as `"[5,1] [2,2,2]"` in `*witnesses`.
///
/// # Safety
/// `value` and `witnesses` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_lambda2(
    n: usize,
    k: usize,
    value: *mut *mut c_char,
    witnesses: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        if value.is_null() || witnesses.is_null() {
            return Err(Failure::Null("output pointer"));
        }
        let second = SecondEigenvalue::from_spectrum(&full_spectrum(n, k)?)?;
        let names: Vec<String> = second.witnesses.iter().map(Partition::bracketed).collect();
        write_out(value, to_c(second.value.to_string()), "value")?;
        write_out(witnesses, to_c(names.join(" ")), "witnesses")?;
        Ok(CsStatus::Ok)
    })
}

/// Closed-form eigenvalue for a low-dimensional shape such as `"n-2,2"`.
///
/// # Safety
/// `shape` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_closed_form(shape: *const c_char, n: usize, k: usize, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let shape: Table1Shape = read_str(shape, "shape")?.parse()?;
        let value = closed_form_table1(shape, n, k)?;
        write_out(out, to_c(value.to_string()), "out")?;
        Ok(CsStatus::Ok)
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CsHypothesisFlags {
    pub in_main_theorem_range: bool,
    pub unique_rimhook_range: bool,
    pub sqrtkfact_bound_holds: bool,
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_hypothesis(n: usize, k: usize, out: *mut CsHypothesisFlags) -> CsStatus {
    guard(|| {
        if n < 2 || k > n - 2 {
            return Err(Failure::Other(
                CsStatus::OutOfRange,
                format!("need 0 <= k <= n-2, got n={n}, k={k}"),
            ));
        }
        let f = hypothesis_check(n, k);
        let flags = CsHypothesisFlags {
            in_main_theorem_range: f.in_main_theorem_range,
            unique_rimhook_range: f.unique_rimhook_range,
            sqrtkfact_bound_holds: f.sqrtkfact_bound_holds,
        };
        write_out(out, flags, "out")?;
        Ok(CsStatus::Ok)
    })
}

/// Exact spectrum of `Γ(n,k)`.
pub struct CsSpectrum(Spectrum);

/// # Safety
/// `out` must be writable. Free the handle with [`cs_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_new(n: usize, k: usize, out: *mut *mut CsSpectrum) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let spectrum = full_spectrum(n, k)?;
        write_out(out, Box::into_raw(Box::new(CsSpectrum(spectrum))), "out")?;
        Ok(CsStatus::Ok)
    })
}

/// # Safety
/// `spectrum` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_free(spectrum: *mut CsSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Number of irreducibles (one entry each); 0 for NULL.
///
/// # Safety
/// `spectrum` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_len(spectrum: *const CsSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.entries.len())
}

/// Entry `index` (eigenvalues descending) as three decimal strings.
///
/// # Safety
/// `spectrum` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_entry(
    spectrum: *const CsSpectrum,
    index: usize,
    partition: *mut *mut c_char,
    eigenvalue: *mut *mut c_char,
    multiplicity: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        let s = spectrum.as_ref().ok_or(Failure::Null("spectrum"))?;
        if partition.is_null() || eigenvalue.is_null() || multiplicity.is_null() {
            return Err(Failure::Null("output pointer"));
        }
        let e = s.0.entries.get(index).ok_or_else(|| {
            Failure::Other(
                CsStatus::OutOfRange,
                format!("index {index} out of range for {} entries", s.0.entries.len()),
            )
        })?;
        write_out(partition, to_c(e.partition.to_string()), "partition")?;
        write_out(eigenvalue, to_c(e.eigenvalue.to_string()), "eigenvalue")?;
        write_out(multiplicity, to_c(e.multiplicity.to_string()), "multiplicity")?;
        Ok(CsStatus::Ok)
    })
}

/// The spectrum as JSON, or NULL for a NULL handle.
///
/// # Safety
/// `spectrum` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_to_json(spectrum: *const CsSpectrum) -> *mut c_char {
    spectrum.as_ref().map_or(ptr::null_mut(), |s| to_c(s.0.to_json()))
}

/// Recursive 5-cycle certification on `Alt(8)`.
pub struct CsCertification(CertificationReport);

/// Runs the certification. A report that does not pass is still returned,
/// together with [`CsStatus::VerificationFailed`].
///
/// # Safety
/// `out` must be writable. Free the handle with [`cs_certification_free`].
#[no_mangle]
pub unsafe extern "C" fn cs_certification_run(
    tol: f64,
    seed: u64,
    max_iter: usize,
    out: *mut *mut CsCertification,
) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Failure::Other(CsStatus::OutOfRange, format!("tol must lie in (0,1), got {tol}")));
        }
        let config = CertificationConfig {
            tol,
            seed,
            max_iter,
            strategy: NeighborStrategy::Auto,
        };
        let report = verify_recursive_5cycles(&config)?;
        let pass = report.all_pass;
        let aborted = report.aborted_at;
        write_out(out, Box::into_raw(Box::new(CsCertification(report))), "out")?;
        if pass {
            Ok(CsStatus::Ok)
        } else {
            Err(Failure::Other(
                CsStatus::VerificationFailed,
                format!("certification failed at k={}", aborted.unwrap_or(0)),
            ))
        }
    })
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_certification_free(report: *mut CsCertification) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_certification_passed(report: *const CsCertification) -> bool {
    report.as_ref().is_some_and(|r| r.0.all_pass)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_certification_len(report: *const CsCertification) -> usize {
    report.as_ref().map_or(0, |r| r.0.records.len())
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CsCertificationRecord {
    pub k: usize,
    pub valency: usize,
    pub lambda1_numeric: f64,
    pub lambda2_numeric: f64,
    pub rhs_exact: i64,
    /// Largest residual among the computed eigenpairs.
    pub max_residual: f64,
    pub iterations: usize,
    pub pass: bool,
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_certification_record(
    report: *const CsCertification,
    index: usize,
    out: *mut CsCertificationRecord,
) -> CsStatus {
    guard(|| {
        let r = report.as_ref().ok_or(Failure::Null("report"))?;
        let rec = r.0.records.get(index).ok_or_else(|| {
            Failure::Other(
                CsStatus::OutOfRange,
                format!("index {index} out of range for {} records", r.0.records.len()),
            )
        })?;
        let record = CsCertificationRecord {
            k: rec.k,
            valency: rec.valency,
            lambda1_numeric: rec.lambda1_numeric,
            lambda2_numeric: rec.lambda2_numeric,
            rhs_exact: rec.rhs_exact,
            max_residual: rec.residuals.iter().copied().fold(0.0, f64::max),
            iterations: rec.iterations,
            pass: rec.pass,
        };
        write_out(out, record, "out")?;
        Ok(CsStatus::Ok)
    })
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_certification_to_json(report: *const CsCertification) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| to_c(r.0.to_json()))
}
