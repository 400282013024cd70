use std::ffi::{CStr, CString};
use std::ptr;

use cozero_ffi::*;

fn owned(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cz_string_free(s) };
    text
}

fn last_error() -> String {
    let p = cz_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn ring(notation: &str) -> *mut CzRing {
    let text = CString::new(notation).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cz_ring_parse(text.as_ptr(), &mut out) }, CzStatus::Ok);
    out
}

#[test]
fn ring_and_graph_round_trip() {
    let r = ring("Z2xF4");
    let (mut order, mut units) = (0, 0);
    assert_eq!(unsafe { cz_ring_order(r, &mut order, &mut units) }, CzStatus::Ok);
    assert_eq!((order, units), (8, 3));
    let mut name = ptr::null_mut();
    assert_eq!(unsafe { cz_ring_name(r, &mut name) }, CzStatus::Ok);
    assert_eq!(owned(name), "Z2 x F4");

    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cz_graph_build(r, CzGraphKind::Cozero, &mut g) }, CzStatus::Ok);
    let (mut v, mut e) = (0, 0);
    assert_eq!(unsafe { cz_graph_size(g, &mut v, &mut e) }, CzStatus::Ok);
    // K_{1,3}: (1,0) against the three (0, u).
    assert_eq!((v, e), (4, 3));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cz_graph_to_json(g, &mut json) }, CzStatus::Ok);
    let json = CString::new(owned(json)).unwrap();
    let mut g2 = ptr::null_mut();
    assert_eq!(unsafe { cz_graph_from_json(json.as_ptr(), &mut g2) }, CzStatus::Ok);
    assert_eq!(unsafe { cz_graph_size(g2, &mut v, &mut e) }, CzStatus::Ok);
    assert_eq!((v, e), (4, 3));

    unsafe {
        cz_graph_free(g2);
        cz_graph_free(g);
        cz_ring_free(r);
    }
}

#[test]
fn genus_of_listed_ring() {
    let r = ring("Z5xZ7");
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cz_graph_build(r, CzGraphKind::Cozero, &mut g) }, CzStatus::Ok);
    let mut out = CzGenus::default();
    assert_eq!(unsafe { cz_graph_genus(g, CzBudget::Quick, 1, &mut out) }, CzStatus::Ok);
    assert_eq!(
        out,
        CzGenus {
            lower: 2,
            upper: 2,
            exact: true
        }
    );

    let mut rec = ptr::null_mut();
    assert_eq!(
        unsafe { cz_classify(r, CzGraphKind::Cozero, CzBudget::Quick, 1, &mut rec) },
        CzStatus::Ok
    );
    let rec: serde_json::Value = serde_json::from_str(&owned(rec)).unwrap();
    assert_eq!(rec["status"], "2");
    unsafe {
        cz_graph_free(g);
        cz_ring_free(r);
    }
}

#[test]
fn certificate_checks() {
    let r = ring("Z4xZ4");
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cz_graph_build(r, CzGraphKind::Cozero, &mut g) }, CzStatus::Ok);
    let mut rec = ptr::null_mut();
    assert_eq!(
        unsafe { cz_classify(r, CzGraphKind::Cozero, CzBudget::Quick, 1, &mut rec) },
        CzStatus::Ok
    );
    drop(owned(rec));

    let graph = cozero_core::classify::GraphKind::Cozero.build(
        &cozero_core::ring::parse_ring_notation("Z4xZ4")
            .unwrap()
            .build()
            .unwrap(),
    );
    let bound = cozero_core::genus::exact_genus(&graph, &cozero_core::Budget::quick());
    let cert = bound.certificate().expect("search certificate").clone();
    let good = CString::new(cert.to_json()).unwrap();
    assert_eq!(unsafe { cz_certificate_verify(g, good.as_ptr()) }, CzStatus::Ok);

    let mut bad = cert.clone();
    bad.genus += 1;
    let bad = CString::new(bad.to_json()).unwrap();
    assert_eq!(
        unsafe { cz_certificate_verify(g, bad.as_ptr()) },
        CzStatus::CertificateRejected
    );
    assert!(last_error().contains("genus"));

    let junk = CString::new("{").unwrap();
    assert_eq!(unsafe { cz_certificate_verify(g, junk.as_ptr()) }, CzStatus::ParseError);
    unsafe {
        cz_graph_free(g);
        cz_ring_free(r);
    }
}

#[test]
fn errors_are_reported() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { cz_ring_parse(ptr::null(), &mut out) },
        CzStatus::InvalidArgument
    );
    assert!(last_error().contains("null"));
    let bad = CString::new("Q7").unwrap();
    assert_eq!(unsafe { cz_ring_parse(bad.as_ptr(), &mut out) }, CzStatus::ParseError);
    assert!(last_error().contains("Q7"));
    assert!(out.is_null());

    let r = ring("Z6");
    assert_eq!(
        unsafe { cz_ring_order(r, ptr::null_mut(), ptr::null_mut()) },
        CzStatus::InvalidArgument
    );
    let (mut a, mut b) = (0, 0);
    assert_eq!(unsafe { cz_ring_order(r, &mut a, &mut b) }, CzStatus::Ok);
    assert!(cz_last_error_message().is_null());
    unsafe {
        cz_ring_free(r);
        cz_ring_free(ptr::null_mut());
        cz_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cozero.h")).unwrap();
    for name in [
        "cz_last_error_message",
        "cz_string_free",
        "cz_ring_parse",
        "cz_ring_free",
        "cz_ring_order",
        "cz_ring_name",
        "cz_graph_build",
        "cz_graph_from_json",
        "cz_graph_free",
        "cz_graph_size",
        "cz_graph_to_json",
        "cz_graph_genus",
        "cz_certificate_verify",
        "cz_classify",
        "typedef struct CzRing CzRing",
        "typedef struct CzGraph CzGraph",
        "CZ_STATUS_CERTIFICATE_REJECTED = 3",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = std::env::temp_dir().join(format!("cozero-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"cozero.h\"\n\
         int main(void) {\n\
           CzRing *r = 0; CzGraph *g = 0; CzGenus out;\n\
           if (cz_ring_parse(\"Z4xF8\", &r) != CZ_STATUS_OK) return 1;\n\
           cz_graph_build(r, CZ_GRAPH_KIND_REDUCED, &g);\n\
           cz_graph_genus(g, CZ_BUDGET_QUICK, 1, &out);\n\
           cz_graph_free(g); cz_ring_free(r);\n\
           return (int)out.lower;\n\
         }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
    let _ = std::fs::remove_dir_all(dir);
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
