use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use spectramin_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    sm_string_free(p);
    s
}

#[test]
fn graph6_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(sm_graph_from_graph6(cstr("Dhc").as_ptr(), &mut g), SmStatus::Ok);
        let (mut n, mut e) = (0usize, 0usize);
        assert_eq!(sm_graph_counts(g, &mut n, &mut e), SmStatus::Ok);
        assert_eq!((n, e), (5, 5));
        let mut s = ptr::null_mut();
        assert_eq!(sm_graph_to_graph6(g, &mut s), SmStatus::Ok);
        assert_eq!(take_string(s), "Dhc");
        sm_graph_free(g);
    }
}

#[test]
fn construct_transform_rho() {
    unsafe {
        let mut p4 = ptr::null_mut();
        assert_eq!(sm_construct(cstr("path:n=4").as_ptr(), &mut p4), SmStatus::Ok);
        let mut c4 = ptr::null_mut();
        assert_eq!(sm_transform(p4, cstr("rotate:r=1,s=0,t=3").as_ptr(), &mut c4), SmStatus::Ok);
        let (mut rho, mut err) = (0.0, 1.0);
        assert_eq!(sm_spectral_radius(c4, 1e-12, &mut rho, &mut err), SmStatus::Ok);
        assert!((rho - 2.0).abs() < 1e-10 && err < 1e-9);
        assert_eq!(sm_spectral_radius(c4, -1.0, &mut rho, ptr::null_mut()), SmStatus::InvalidArgument);
        sm_graph_free(p4);
        sm_graph_free(c4);
    }
}

#[test]
fn errors_set_message() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(sm_graph_from_graph6(cstr("~~~").as_ptr(), &mut g), SmStatus::Parse);
        assert!(g.is_null());
        let msg = CStr::from_ptr(sm_last_error_message()).to_str().unwrap();
        assert!(msg.contains("graph6"), "{msg}");
        assert_eq!(sm_construct(cstr("circulant:n=7,d=3").as_ptr(), &mut g), SmStatus::Infeasible);
        assert_eq!(sm_graph_from_graph6(ptr::null(), &mut g), SmStatus::NullPointer);
        let mut s = ptr::null_mut();
        assert_eq!(sm_minimize_json(4, 2, &mut s), SmStatus::Infeasible);
        sm_graph_free(ptr::null_mut());
        sm_string_free(ptr::null_mut());
    }
}

#[test]
fn minimize_json() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sm_minimize_json(6, 8, &mut s), SmStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["n"], 6);
        assert_eq!(v["minimizers"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/spectramin.h");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ SmGraph *g = 0; SmStatus s = sm_construct(\"cycle:n=5\", &g); sm_graph_free(g); return s == SM_STATUS_OK ? 0 : 1; }}\n"
        ),
    )
    .unwrap();
    let status = match Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&src).status() {
        Ok(s) => s,
        Err(_) => {
            eprintln!("no C compiler; skipping");
            return;
        }
    };
    assert!(status.success());
}
