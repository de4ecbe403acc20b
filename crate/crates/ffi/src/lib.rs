//! C ABI over the `oddsqueeze` library.
//!
//! Every fallible function returns an [`OsqStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`osq_last_error_message`] on the same thread. Strings returned to the
//! caller are owned by the caller and must be released with
//! [`osq_string_free`]; handles are released with their own `_free`
//! function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use oddsqueeze::cli::{run_suite, Mode, Suite, SuiteConfig};
use oddsqueeze::operator::{squeeze_matrix, TruncatedOperator};
use oddsqueeze::ortho::jacobi_recurrence;
use oddsqueeze::overlaps::{overlap_value, SqueezeParam, ZetaPoint};
use oddsqueeze::quadrature::{QuadratureKind, QuadratureSpec};
use oddsqueeze::report::{rational_string, ReportDocument};
use oddsqueeze::verify::{i_pn_exact, i_pn_quadrature, racah_inner_sum};
use oddsqueeze::{BigRational, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsqStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    InvalidArgument = 3,
    Numerical = 4,
    Io = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsqQuadrature {
    GaussLegendre = 0,
    GaussJacobi = 1,
    TanhSinh = 2,
}

/// Opaque handle to a truncated squeeze matrix `D(ξ)`.
pub struct OsqSqueezeMatrix {
    inner: TruncatedOperator,
}

/// Opaque handle to a completed verification report.
pub struct OsqReport {
    inner: ReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: OsqStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) => OsqStatus::Domain,
            Error::InvalidSpec(_) | Error::Usage(_) => OsqStatus::InvalidArgument,
            Error::Numerical(_) => OsqStatus::Numerical,
            Error::Json(_) | Error::Csv(_) => OsqStatus::Io,
            Error::Io(_) => OsqStatus::Io,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn null_pointer(what: &str) -> Failure {
    Failure {
        status: OsqStatus::NullPointer,
        message: format!("{what} is null"),
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> OsqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            OsqStatus::Ok
        }
        Ok(Err(f)) => {
            set_last_error(f.message);
            f.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            OsqStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null_pointer(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure {
        status: OsqStatus::InvalidArgument,
        message: format!("{what} is not valid UTF-8"),
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

unsafe fn write_rational(out: *mut *mut c_char, q: &BigRational) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    out.write(into_c_string(rational_string(q)));
    Ok(())
}

/// Message describing the most recent failure on this thread, or null.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn osq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn osq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `I(p,n)` as an exact `"num/den"` string.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn osq_ipn_exact(p: i64, n: i64, out: *mut *mut c_char) -> OsqStatus {
    guard(|| write_rational(out, &i_pn_exact(p, n)?))
}

/// The inner alternating factorial sum as an exact `"num/den"` string.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn osq_racah_inner_sum(p: i64, n: i64, l: i64, out: *mut *mut c_char) -> OsqStatus {
    guard(|| write_rational(out, &racah_inner_sum(p, n, l)?))
}

/// `P_n^(alpha,beta)(y)` by the three-term recurrence.
///
/// # Safety
/// `out` must be valid for an `f64` write.
#[no_mangle]
pub unsafe extern "C" fn osq_jacobi_recurrence(n: u64, alpha: f64, beta: f64, y: f64, out: *mut f64) -> OsqStatus {
    guard(|| {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Failure {
                status: OsqStatus::Domain,
                message: format!("need alpha, beta > -1, got ({alpha}, {beta})"),
            });
        }
        write(out, jacobi_recurrence(n, alpha, beta, y), "out")
    })
}

/// `⟨2m+1|ζ;2n+1⟩` for `ζ = |ζ| e^{-i phase}`.
///
/// # Safety
/// `out_re` and `out_im` must be valid for `f64` writes.
#[no_mangle]
pub unsafe extern "C" fn osq_overlap_value(
    m: u64,
    n: u64,
    zeta_modulus: f64,
    phase: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> OsqStatus {
    guard(|| {
        if out_re.is_null() || out_im.is_null() {
            return Err(null_pointer("out_re/out_im"));
        }
        let v = overlap_value(m, n, &ZetaPoint::new(zeta_modulus, phase)?);
        out_re.write(v.re);
        out_im.write(v.im);
        Ok(())
    })
}

/// `I(p,n)` by quadrature. `node_count` is ignored for tanh-sinh and
/// `tol` is ignored by the Gauss rules.
///
/// # Safety
/// `out` must be valid for an `f64` write.
#[no_mangle]
pub unsafe extern "C" fn osq_ipn_quadrature(
    p: i64,
    n: i64,
    kind: OsqQuadrature,
    node_count: usize,
    tol: f64,
    out: *mut f64,
) -> OsqStatus {
    guard(|| {
        let spec = match kind {
            OsqQuadrature::GaussLegendre => QuadratureSpec::new(QuadratureKind::GaussLegendre, node_count, tol)?,
            OsqQuadrature::GaussJacobi => QuadratureSpec::new(QuadratureKind::GaussJacobi, node_count, tol)?,
            OsqQuadrature::TanhSinh => QuadratureSpec::tanh_sinh(tol),
        };
        write(out, i_pn_quadrature(p, n, &spec)?.value, "out")
    })
}

/// Build `D(ξ)` on `dim` Fock levels with `ξ = xi_modulus · e^{-i phase}`.
///
/// # Safety
/// `out` must be valid for a pointer write. The handle must be released
/// with [`osq_squeeze_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn osq_squeeze_matrix_new(
    xi_modulus: f64,
    phase: f64,
    dim: usize,
    out: *mut *mut OsqSqueezeMatrix,
) -> OsqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        let inner = squeeze_matrix(&SqueezeParam::new(xi_modulus, phase)?, dim)?;
        out.write(Box::into_raw(Box::new(OsqSqueezeMatrix { inner })));
        Ok(())
    })
}

/// Number of Fock levels, or zero for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osq_squeeze_matrix_dim(h: *const OsqSqueezeMatrix) -> usize {
    h.as_ref().map_or(0, |m| m.inner.dim())
}

/// `⟨row|D(ξ)|col⟩`.
///
/// # Safety
/// `h` must be a live handle; `out_re` and `out_im` must be valid for
/// `f64` writes.
#[no_mangle]
pub unsafe extern "C" fn osq_squeeze_matrix_entry(
    h: *const OsqSqueezeMatrix,
    row: usize,
    col: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> OsqStatus {
    guard(|| {
        let m = h.as_ref().ok_or_else(|| null_pointer("handle"))?;
        if out_re.is_null() || out_im.is_null() {
            return Err(null_pointer("out_re/out_im"));
        }
        let dim = m.inner.dim();
        if row >= dim || col >= dim {
            return Err(Failure {
                status: OsqStatus::InvalidArgument,
                message: format!("entry ({row}, {col}) outside a {dim}x{dim} matrix"),
            });
        }
        let z = m.inner.entry(row, col);
        out_re.write(z.re);
        out_im.write(z.im);
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`osq_squeeze_matrix_new`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn osq_squeeze_matrix_free(h: *mut OsqSqueezeMatrix) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Run a verification suite. `suite` is one of `jacobi`, `racah`, `ipn`,
/// `identities`, `operator`, `completeness`, `even-divergence`, `all`;
/// `mode` is `exact`, `float` or `both`. Failed checks do not make this
/// call fail; inspect [`osq_report_failed`].
///
/// # Safety
/// `suite` and `mode` must be NUL-terminated strings; `out` must be valid
/// for a pointer write. The handle must be released with
/// [`osq_report_free`].
#[no_mangle]
pub unsafe extern "C" fn osq_report_run(
    suite: *const c_char,
    mode: *const c_char,
    p_max: u64,
    n_max: u64,
    tol: f64,
    out: *mut *mut OsqReport,
) -> OsqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let mode: Mode = read_str(mode, "mode")?.parse()?;
        let mut config = SuiteConfig::new(suite, p_max);
        config.n_max = n_max;
        config.mode = mode;
        config.tol = tol;
        let inner = run_suite(&config)?;
        out.write(Box::into_raw(Box::new(OsqReport { inner })));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osq_report_record_count(h: *const OsqReport) -> usize {
    h.as_ref().map_or(0, |r| r.inner.records.len())
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osq_report_passed(h: *const OsqReport) -> usize {
    h.as_ref().map_or(0, |r| r.inner.summary().passed)
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn osq_report_failed(h: *const OsqReport) -> usize {
    h.as_ref().map_or(0, |r| r.inner.summary().failed)
}

/// The report as a JSON document; free with [`osq_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn osq_report_to_json(h: *const OsqReport, out: *mut *mut c_char) -> OsqStatus {
    guard(|| {
        let r = h.as_ref().ok_or_else(|| null_pointer("handle"))?;
        let json = r.inner.to_json()?;
        write(out, into_c_string(json), "out")
    })
}

/// # Safety
/// `h` must be null or a handle from [`osq_report_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn osq_report_free(h: *mut OsqReport) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
