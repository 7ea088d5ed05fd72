use std::ffi::{CStr, CString};
use std::ptr;

use brtknot_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { brt_string_free(p) };
    s
}

fn last_error() -> Option<String> {
    let p = brt_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn trefoil() -> *mut BrtDiagram {
    let pd = CString::new("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { brt_diagram_from_pd(pd.as_ptr(), &mut d) }, BrtStatus::Ok);
    d
}

#[test]
fn trefoil_round_trip() {
    let d = trefoil();
    let mut n = 0usize;
    let mut w = 0i64;
    unsafe {
        assert_eq!(brt_diagram_crossings(d, &mut n), BrtStatus::Ok);
        assert_eq!(brt_diagram_writhe(d, &mut w), BrtStatus::Ok);
    }
    assert_eq!((n, w), (3, -3));

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { brt_bracket_json(d, 0, &mut s) }, BrtStatus::Ok);
    let via_brt: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(unsafe { brt_bracket_json(d, 1, &mut s) }, BrtStatus::Ok);
    let oracle: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(via_brt, oracle);
    assert_eq!(via_brt["text"], "A^7 - A^3 - A^-5");

    assert_eq!(unsafe { brt_jones_json(d, &mut s) }, BrtStatus::Ok);
    let jones: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(jones["text"], "t^(-1) + t^(-3) - t^(-4)");

    let mut texts = Vec::new();
    for m in [BrtMethod::Recursive, BrtMethod::Subgraph, BrtMethod::Tree] {
        assert_eq!(unsafe { brt_polynomial_json(d, m as u32, &mut s) }, BrtStatus::Ok);
        texts.push(take_string(s));
    }
    assert!(texts.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(unsafe { brt_polynomial_json(d, 9, &mut s) }, BrtStatus::ParseError);

    assert_eq!(unsafe { brt_analysis_json(d, &mut s) }, BrtStatus::Ok);
    let record: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(record["span_t"], "3");
    assert_eq!(record["diagram_genus"], "0");
    unsafe { brt_diagram_free(d) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("X[1,2,3,4]").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { brt_diagram_from_pd(bad.as_ptr(), &mut d) }, BrtStatus::ParseError);
    assert!(d.is_null());
    assert!(last_error().unwrap().contains("edge label"));

    let word = CString::new("1").unwrap();
    assert_eq!(unsafe { brt_diagram_from_braid(word.as_ptr(), 3, &mut d) }, BrtStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { brt_jones_json(d, &mut s) }, BrtStatus::Precondition);
    assert!(s.is_null());
    assert!(last_error().unwrap().contains("disconnected"));
    unsafe { brt_diagram_free(d) };

    assert_eq!(unsafe { brt_diagram_from_pd(ptr::null(), &mut d) }, BrtStatus::NullPointer);
    let t = trefoil();
    assert_eq!(unsafe { brt_diagram_crossings(t, ptr::null_mut()) }, BrtStatus::NullPointer);
    let mut n = 0usize;
    assert_eq!(unsafe { brt_diagram_crossings(t, &mut n) }, BrtStatus::Ok);
    assert!(last_error().is_none());
    unsafe {
        brt_diagram_free(t);
        brt_diagram_free(ptr::null_mut());
        brt_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/brtknot.h");
    let src = format!(
        r#"#include "{}"
int main(void) {{
    BrtDiagram *d = 0;
    char *json = 0;
    size_t n = 0;
    if (brt_diagram_from_pd("X[1,1,2,2]", &d) != BRT_STATUS_OK) return 1;
    brt_diagram_crossings(d, &n);
    brt_polynomial_json(d, BRT_METHOD_TREE, &json);
    brt_string_free(json);
    brt_diagram_free(d);
    return brt_last_error() == 0 ? 0 : 2;
}}
"#,
        header.display()
    );
    let tmp = tempfile::tempdir().unwrap();
    let c_file = tmp.path().join("use_header.c");
    std::fs::write(&c_file, src).unwrap();
    let status = std::process::Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&c_file).status();
    match status {
        Ok(s) => assert!(s.success(), "header failed to compile"),
        Err(e) => panic!("no C compiler available to check the header: {e}"),
    }
}
