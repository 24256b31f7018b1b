//! C ABI for the projindex library.
//!
//! Handles are opaque pointers; every string returned through an out-pointer
//! is heap-allocated and must be released with [`projindex_string_free`].
//! Functions report a [`ProjindexStatus`]; on any non-Ok status the
//! thread-local message from [`projindex_last_error_message`] describes what
//! went wrong. Points travel as comma-separated rational strings ("1,0,0"),
//! matching the CLI's `--point` flag; larger payloads (point lists, reports)
//! travel as JSON.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use projindex::report::{points_from_json, VerificationReport};
use projindex::residue::{res1, res2, res3, ResidueOptions};
use projindex::scalar::parse_scalar;
use projindex::theorems::{
    abel_identity_check, census, ueda_check, ueda_polynomial_checks, verify_residue_sum,
    SumIdentity,
};
use projindex::{cli, Error, HomogeneousMap, ProjPoint};

/// Opaque handle to a validated homogeneous map.
pub struct ProjindexMap {
    inner: HomogeneousMap,
}

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProjindexStatus {
    /// Success.
    Ok = 0,
    /// Malformed or semantically invalid input.
    InputError = 1,
    /// The computation ran but the verification did not pass.
    VerifyFailed = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// Unexpected internal failure.
    InternalError = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(cleaned).unwrap());
}

fn fail(status: ProjindexStatus, msg: &str) -> ProjindexStatus {
    set_error(msg);
    status
}

fn fail_with(err: &Error) -> ProjindexStatus {
    fail(ProjindexStatus::InputError, &err.to_string())
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next projindex call on the same thread.
#[no_mangle]
pub extern "C" fn projindex_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must have been returned by a projindex function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn projindex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ProjindexStatus> {
    if ptr.is_null() {
        return Err(fail(ProjindexStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(ProjindexStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn write_string(out: *mut *mut c_char, value: String) -> ProjindexStatus {
    if out.is_null() {
        return fail(ProjindexStatus::NullPointer, "null output pointer");
    }
    let cleaned: String = value.chars().filter(|&c| c != '\0').collect();
    let cs = CString::new(cleaned).expect("NUL-free string");
    unsafe { *out = cs.into_raw() };
    ProjindexStatus::Ok
}

fn guard(f: impl FnOnce() -> ProjindexStatus) -> ProjindexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(ProjindexStatus::InternalError, "internal panic"),
    }
}

fn parse_point(map: &HomogeneousMap, csv: &str) -> Result<ProjPoint, Error> {
    let coords: Vec<String> = csv.split(',').map(|c| c.trim().to_string()).collect();
    if coords.len() != map.n() + 1 {
        return Err(Error::InvalidPoint(format!(
            "expected {} comma-separated coordinates, got {}",
            map.n() + 1,
            coords.len()
        )));
    }
    ProjPoint::parse(&coords)
}

/// Parse a map from JSON `{"n": 2, "components": ["z1*z2", ...]}` and hand
/// back an owned handle (release with [`projindex_map_free`]).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be non-null.
#[no_mangle]
pub unsafe extern "C" fn projindex_map_parse_json(
    json: *const c_char,
    out: *mut *mut ProjindexMap,
) -> ProjindexStatus {
    guard(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(ProjindexStatus::NullPointer, "null output pointer");
        }
        let mj: projindex::report::MapJson = match serde_json::from_str(text) {
            Ok(m) => m,
            Err(e) => return fail(ProjindexStatus::InputError, &format!("map JSON: {e}")),
        };
        match mj.to_map() {
            Ok(map) => {
                *out = Box::into_raw(Box::new(ProjindexMap { inner: map }));
                ProjindexStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Release a map handle.
///
/// # Safety
/// `map` must come from [`projindex_map_parse_json`] and not be used after.
#[no_mangle]
pub unsafe extern "C" fn projindex_map_free(map: *mut ProjindexMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Projective dimension n of the map's source, or -1 on null.
///
/// # Safety
/// `map` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn projindex_map_dim(map: *const ProjindexMap) -> c_int {
    map.as_ref().map_or(-1, |m| m.inner.n() as c_int)
}

/// Common degree nu+1 of the components, or -1 on null.
///
/// # Safety
/// `map` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn projindex_map_degree(map: *const ProjindexMap) -> c_int {
    map.as_ref().map_or(-1, |m| m.inner.deg() as c_int)
}

unsafe fn with_map_point<'a>(
    map: *const ProjindexMap,
    point_csv: *const c_char,
) -> Result<(&'a HomogeneousMap, ProjPoint), ProjindexStatus> {
    let Some(handle) = map.as_ref() else {
        return Err(fail(ProjindexStatus::NullPointer, "null map handle"));
    };
    let csv = read_str(point_csv)?;
    match parse_point(&handle.inner, csv) {
        Ok(p) => Ok((&handle.inner, p)),
        Err(e) => Err(fail_with(&e)),
    }
}

/// Classify a point; writes one of "FixedPoint", "IndeterminacyPoint",
/// "RegularNonFixed".
///
/// # Safety
/// `map` must be a live handle; strings as in [`projindex_map_parse_json`].
#[no_mangle]
pub unsafe extern "C" fn projindex_classify(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    out_class: *mut *mut c_char,
) -> ProjindexStatus {
    guard(|| {
        let (m, p) = match with_map_point(map, point_csv) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match projindex::projmap::classify_point(m, &p) {
            Ok(class) => write_string(out_class, class.as_str().to_string()),
            Err(e) => fail_with(&e),
        }
    })
}

/// Local multiplicity of a singular point (dimension of the local quotient).
///
/// # Safety
/// As for [`projindex_classify`]; `out_mult` must be non-null.
#[no_mangle]
pub unsafe extern "C" fn projindex_multiplicity(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    out_mult: *mut c_int,
) -> ProjindexStatus {
    guard(|| {
        let (m, p) = match with_map_point(map, point_csv) {
            Ok(v) => v,
            Err(s) => return s,
        };
        if out_mult.is_null() {
            return fail(ProjindexStatus::NullPointer, "null output pointer");
        }
        let opts = ResidueOptions::default();
        match census(m, std::slice::from_ref(&p), &opts) {
            Ok((outcomes, _)) => match outcomes[0].mult() {
                Some(mult) => {
                    *out_mult = mult as c_int;
                    ProjindexStatus::Ok
                }
                None => fail(
                    ProjindexStatus::InputError,
                    "point is regular; no multiplicity",
                ),
            },
            Err(e) => fail_with(&e),
        }
    })
}

unsafe fn residue_common(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    sym: Option<*const c_char>,
    out_value: *mut *mut c_char,
    kind: u8,
) -> ProjindexStatus {
    let (m, p) = match with_map_point(map, point_csv) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let opts = ResidueOptions::default();
    let result = match kind {
        1 => res1(m, &p, &opts),
        2 | 3 => {
            let src = match read_str(sym.expect("sym pointer for res2/res3")) {
                Ok(s) => s,
                Err(status) => return status,
            };
            let spec = if kind == 2 {
                cli::parse_symspec(src, m.n(), m.n(), false)
            } else {
                cli::parse_symspec(src, m.n() + 1, m.n(), true)
            };
            match spec {
                Ok(spec) => {
                    if kind == 2 {
                        res2(m, &p, &spec, &opts)
                    } else {
                        res3(m, &p, &spec, &opts)
                    }
                }
                Err(e) => return fail_with(&e),
            }
        }
        _ => unreachable!(),
    };
    match result {
        Ok(v) => write_string(out_value, projindex::scalar::scalar_string(&v.value)),
        Err(e) => fail_with(&e),
    }
}

/// First index residue at a singular point, as a reduced "p/q" string.
///
/// # Safety
/// As for [`projindex_classify`].
#[no_mangle]
pub unsafe extern "C" fn projindex_residue1(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    out_value: *mut *mut c_char,
) -> ProjindexStatus {
    guard(|| residue_common(map, point_csv, None, out_value, 1))
}

/// Second index residue for the symmetric polynomial `phi` (n variables,
/// degree n; "e1^2" or "z1^2+z2^2" style).
///
/// # Safety
/// As for [`projindex_classify`].
#[no_mangle]
pub unsafe extern "C" fn projindex_residue2(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    phi: *const c_char,
    out_value: *mut *mut c_char,
) -> ProjindexStatus {
    guard(|| residue_common(map, point_csv, Some(phi), out_value, 2))
}

/// Third index residue for the symmetric polynomial `psi` (n+1 variables,
/// degree n; requires map degree >= 3).
///
/// # Safety
/// As for [`projindex_classify`].
#[no_mangle]
pub unsafe extern "C" fn projindex_residue3(
    map: *const ProjindexMap,
    point_csv: *const c_char,
    psi: *const c_char,
    out_value: *mut *mut c_char,
) -> ProjindexStatus {
    guard(|| residue_common(map, point_csv, Some(psi), out_value, 3))
}

/// Run a verification over a JSON point list `[["1","0","0"], ...]`.
/// `which` is one of "1i", "1ii", "1iii", "ueda", "ueda-poly", "census";
/// `phi`/`psi` may be null when unused. Writes the full report JSON and
/// returns Ok when the verification passed, VerifyFailed when it ran but did
/// not pass.
///
/// # Safety
/// As for [`projindex_classify`]; `points_json` and `out_report_json` must
/// be non-null.
#[no_mangle]
pub unsafe extern "C" fn projindex_verify(
    map: *const ProjindexMap,
    points_json: *const c_char,
    which: *const c_char,
    phi: *const c_char,
    psi: *const c_char,
    out_report_json: *mut *mut c_char,
) -> ProjindexStatus {
    guard(|| {
        let Some(handle) = map.as_ref() else {
            return fail(ProjindexStatus::NullPointer, "null map handle");
        };
        let m = &handle.inner;
        let points = match read_str(points_json).map(points_from_json) {
            Ok(Ok(p)) => p,
            Ok(Err(e)) => return fail_with(&e),
            Err(s) => return s,
        };
        let which = match read_str(which) {
            Ok(w) => w,
            Err(s) => return s,
        };
        let opts = ResidueOptions::default();
        let spec_of = |src: *const c_char,
                       arity: usize,
                       z0: bool|
         -> Result<Option<projindex::SymSpec>, Error> {
            if src.is_null() {
                return Ok(None);
            }
            let text = CStr::from_ptr(src)
                .to_str()
                .map_err(|_| Error::InvalidInput("non-UTF-8 symmetric polynomial".into()))?;
            cli::parse_symspec(text, arity, m.n(), z0).map(Some)
        };
        let report: Result<VerificationReport, Error> = (|| match which {
            "1i" => Ok(VerificationReport::from_sum_check(&verify_residue_sum(
                m,
                &points,
                SumIdentity::Res1,
                None,
                &opts,
            )?)),
            "1ii" => {
                let phi = spec_of(phi, m.n(), false)?
                    .ok_or_else(|| Error::InvalidInput("phi is required for 1ii".into()))?;
                Ok(VerificationReport::from_sum_check(&verify_residue_sum(
                    m,
                    &points,
                    SumIdentity::Res2,
                    Some(&phi),
                    &opts,
                )?))
            }
            "1iii" => {
                let psi = spec_of(psi, m.n() + 1, true)?
                    .ok_or_else(|| Error::InvalidInput("psi is required for 1iii".into()))?;
                Ok(VerificationReport::from_sum_check(&verify_residue_sum(
                    m,
                    &points,
                    SumIdentity::Res3,
                    Some(&psi),
                    &opts,
                )?))
            }
            "ueda" => {
                let mut checks = Vec::new();
                for k in 0..=m.n() {
                    checks.push(ueda_check(m, &points, k, &opts)?);
                }
                Ok(VerificationReport::from_ueda(&checks))
            }
            "ueda-poly" => {
                let samples = vec![
                    projindex::scalar::sc(0),
                    projindex::scalar::sc(1),
                    projindex::scalar::sc(2),
                    projindex::scalar::sc(-1),
                    projindex::scalar::sc_frac(1, 2),
                ];
                Ok(VerificationReport::from_ueda_poly(&ueda_polynomial_checks(
                    m, &points, &samples, &opts,
                )?))
            }
            "census" => {
                let (outcomes, totals) = census(m, &points, &opts)?;
                Ok(VerificationReport::from_census(&outcomes, &totals))
            }
            other => Err(Error::InvalidInput(format!(
                "unknown verification {other:?} (expected 1i, 1ii, 1iii, ueda, ueda-poly, census)"
            ))),
        })();
        match report {
            Ok(r) => {
                let pass = r.pass;
                let status = write_string(out_report_json, r.to_json());
                if status != ProjindexStatus::Ok {
                    return status;
                }
                if pass {
                    ProjindexStatus::Ok
                } else {
                    fail(ProjindexStatus::VerifyFailed, "verification did not pass")
                }
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Exact check of Abel's identity at rational arguments given as "p/q"
/// strings; writes 1 (holds) or 0 into `out_holds`.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn projindex_abel(
    r: c_int,
    x: *const c_char,
    y: *const c_char,
    z: *const c_char,
    out_holds: *mut c_int,
) -> ProjindexStatus {
    guard(|| {
        if out_holds.is_null() {
            return fail(ProjindexStatus::NullPointer, "null output pointer");
        }
        if r < 0 {
            return fail(ProjindexStatus::InputError, "r must be nonnegative");
        }
        let parse = |p: *const c_char| -> Result<projindex::Scalar, ProjindexStatus> {
            let s = read_str(p)?;
            parse_scalar(s).map_err(|e| fail_with(&e))
        };
        let (x, y, z) = match (parse(x), parse(y), parse(z)) {
            (Ok(x), Ok(y), Ok(z)) => (x, y, z),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        match abel_identity_check(r as usize, &x, &y, &z) {
            Ok(true) => {
                *out_holds = 1;
                ProjindexStatus::Ok
            }
            Ok(false) => {
                *out_holds = 0;
                fail(ProjindexStatus::VerifyFailed, "identity does not hold")
            }
            Err(e) => fail_with(&e),
        }
    })
}
