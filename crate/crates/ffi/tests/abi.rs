use std::ffi::{c_char, CStr, CString};
use std::ptr;

use oddsqueeze_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    osq_string_free(s);
    owned
}

unsafe fn last_error() -> String {
    let p = osq_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn exact_scalars_come_back_as_rationals() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(osq_ipn_exact(7, 3, &mut s), OsqStatus::Ok);
        assert_eq!(take_string(s), "1/1");
        assert!(osq_last_error_message().is_null());

        assert_eq!(osq_racah_inner_sum(4, 2, 0, &mut s), OsqStatus::Ok);
        assert_eq!(take_string(s), "1/1");
        assert_eq!(osq_racah_inner_sum(4, 2, 1, &mut s), OsqStatus::Ok);
        assert_eq!(take_string(s), "0/1");
    }
}

#[test]
fn domain_errors_set_status_and_message() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(osq_ipn_exact(2, 3, &mut s), OsqStatus::Domain);
        assert!(s.is_null());
        assert!(last_error().contains("n <= p"));

        let mut v = 0.0;
        assert_eq!(osq_jacobi_recurrence(2, -1.5, 0.5, 0.0, &mut v), OsqStatus::Domain);

        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(osq_overlap_value(0, 0, 1.0, 0.0, &mut re, &mut im), OsqStatus::Domain);
    }
}

#[test]
fn null_out_pointers_are_rejected() {
    unsafe {
        assert_eq!(osq_ipn_exact(1, 0, ptr::null_mut()), OsqStatus::NullPointer);
        assert_eq!(osq_jacobi_recurrence(1, 0.0, 0.5, 0.2, ptr::null_mut()), OsqStatus::NullPointer);
        assert_eq!(osq_squeeze_matrix_dim(ptr::null()), 0);
        osq_squeeze_matrix_free(ptr::null_mut());
        osq_report_free(ptr::null_mut());
        osq_string_free(ptr::null_mut());
    }
}

#[test]
fn float_scalars() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(osq_jacobi_recurrence(1, 0.0, 0.5, 1.0, &mut v), OsqStatus::Ok);
        assert!((v - 1.0).abs() < 1e-15);

        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(osq_overlap_value(0, 0, 0.5, 0.0, &mut re, &mut im), OsqStatus::Ok);
        assert!((re - 0.75f64.powf(0.75)).abs() < 1e-15 && im.abs() < 1e-15);

        assert_eq!(osq_ipn_quadrature(3, 1, OsqQuadrature::GaussJacobi, 3, 1e-14, &mut v), OsqStatus::Ok);
        assert!((v - 1.0).abs() < 1e-12);
        assert_eq!(osq_ipn_quadrature(8, 5, OsqQuadrature::TanhSinh, 0, 1e-10, &mut v), OsqStatus::Ok);
        assert!((v - 1.0).abs() < 1e-9);
        assert_eq!(
            osq_ipn_quadrature(3, 1, OsqQuadrature::GaussLegendre, 8, 1e-14, &mut v),
            OsqStatus::InvalidArgument
        );
    }
}

#[test]
fn squeeze_matrix_handle() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(osq_squeeze_matrix_new(0.5, 1.1, 48, &mut h), OsqStatus::Ok);
        assert_eq!(osq_squeeze_matrix_dim(h), 48);

        let (mut re, mut im) = (0.0, 0.0);
        // ⟨1|D|1⟩ = (1 - tanh²r)^{3/4}
        assert_eq!(osq_squeeze_matrix_entry(h, 1, 1, &mut re, &mut im), OsqStatus::Ok);
        let sech2 = 1.0 - 0.5f64.tanh().powi(2);
        assert!((re - sech2.powf(0.75)).abs() < 1e-12 && im.abs() < 1e-12);

        assert_eq!(osq_squeeze_matrix_entry(h, 2, 1, &mut re, &mut im), OsqStatus::Ok);
        assert!(re.hypot(im) < 1e-14);

        assert_eq!(osq_squeeze_matrix_entry(h, 48, 0, &mut re, &mut im), OsqStatus::InvalidArgument);
        assert_eq!(
            osq_squeeze_matrix_entry(ptr::null(), 0, 0, &mut re, &mut im),
            OsqStatus::NullPointer
        );
        osq_squeeze_matrix_free(h);

        assert_eq!(osq_squeeze_matrix_new(-1.0, 0.0, 8, &mut h), OsqStatus::Domain);
    }
}

#[test]
fn report_handle() {
    let suite = CString::new("ipn").unwrap();
    let mode = CString::new("exact").unwrap();
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(osq_report_run(suite.as_ptr(), mode.as_ptr(), 5, 5, 1e-10, &mut h), OsqStatus::Ok);
        assert_eq!(osq_report_record_count(h), 21);
        assert_eq!(osq_report_passed(h), 21);
        assert_eq!(osq_report_failed(h), 0);

        let mut s = ptr::null_mut();
        assert_eq!(osq_report_to_json(h, &mut s), OsqStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(json["summary"]["passed"], 21);
        assert_eq!(json["records"][0]["lhs_rational"], "1/1");
        osq_report_free(h);

        let bad = CString::new("nope").unwrap();
        assert_eq!(
            osq_report_run(bad.as_ptr(), mode.as_ptr(), 5, 5, 1e-10, &mut h),
            OsqStatus::InvalidArgument
        );
        assert!(last_error().contains("nope"));
        assert_eq!(
            osq_report_run(suite.as_ptr(), mode.as_ptr(), 3, 4, 1e-10, &mut h),
            OsqStatus::InvalidArgument
        );
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(osq_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
