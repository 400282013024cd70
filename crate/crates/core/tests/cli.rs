use std::path::PathBuf;

use cozero_core::cli::run;

fn cozero(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("cozero").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cozero-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn ring_show_lists_factors() {
    let (code, out) = cozero(&["ring", "show", "Z4xF8"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 32  units 14"));
    assert!(out.contains("eta 2"));
    let (code, out) = cozero(&["ring", "show", "Z9", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 9);
    assert_eq!(v["local"], true);
}

#[test]
fn ring_from_descriptor_file() {
    let dir = scratch("spec");
    let path = dir.join("ring.json");
    let spec = cozero_core::ring::parse_ring_notation("Z2xZ3").unwrap();
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let (code, out) = cozero(&["ring", "show", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("order 6"));
}

#[test]
fn catalog_table() {
    let (code, out) = cozero(&["ring", "catalog", "--max-order", "9"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("Z2[x]/(x^2)")));
    assert!(out.lines().any(|l| l.starts_with("F9")));
}

#[test]
fn graph_build_json_and_dot() {
    let (code, out) = cozero(&["graph", "build", "--ring", "Z3xZ5", "--kind", "cozero"]);
    assert_eq!(code, 0);
    let g = cozero_core::SimpleGraph::parse_json(&out).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 8));
    let (code, out) = cozero(&["graph", "build", "--ring", "Z8", "--kind", "reduced", "--out", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph G {"));
}

#[test]
fn classify_listed_ring() {
    let (code, out) = cozero(&["classify", "--ring", "Z5xZ7", "--budget", "quick"]);
    assert_eq!(code, 0);
    assert!(out.contains("status 2"));
    assert!(out.contains("formula K4,6 = 2"));

    let (code, out) = cozero(&[
        "classify",
        "--ring",
        "Z16xZ4",
        "--kind",
        "reduced",
        "--format",
        "json",
        "--no-fixtures",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "2");
    assert_eq!(v["kind"], "reduced");
}

#[test]
fn search_then_verify_certificate() {
    let dir = scratch("cert");
    let graph = dir.join("g.json");
    let cert = dir.join("c.json");
    let (code, _) = cozero(&["graph", "build", "--ring", "Z4xZ4", "--output", graph.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out) = cozero(&[
        "genus",
        "search",
        "--in",
        graph.to_str().unwrap(),
        "--budget",
        "quick",
        "--cert-out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("status 2"));
    let (code, out) = cozero(&[
        "genus",
        "verify",
        "--in",
        graph.to_str().unwrap(),
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!((code, out.trim()), (0, "genus 2 verified"));

    let mut c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    c["genus"] = 1.into();
    std::fs::write(&cert, c.to_string()).unwrap();
    let (code, _) = cozero(&[
        "verify",
        "cert",
        "--in",
        graph.to_str().unwrap(),
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);

    let (code, _) = cozero(&["verify", "cert", "--ring", "Z2xZ4", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn bound_skips_exact_search() {
    let (code, out) = cozero(&[
        "genus",
        "bound",
        "--ring",
        "Z2xZ2xZ2xZ2",
        "--kind",
        "reduced",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lower"], 4);
}

#[test]
fn explicit_seed_is_accepted() {
    let (code, out) = cozero(&["classify", "--ring", "Z6", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(cozero(&["classify", "--ring", "Z6", "--seed", "x"]).0, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cozero(&["frobnicate"]).0, 2);
    assert_eq!(cozero(&["classify", "--ring", "Q7"]).0, 2);
    assert_eq!(cozero(&["classify", "--ring", "Z6", "--budget", "huge"]).0, 2);
    assert_eq!(cozero(&["genus", "search"]).0, 2);
    assert_eq!(cozero(&["genus", "search", "--in", "/nonexistent/g.json"]).0, 2);
    let (code, out) = cozero(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("reproduce"));
}

#[test]
fn planar_report_passes() {
    let dir = scratch("report");
    let path = dir.join("planar.json");
    let (code, _) = cozero(&[
        "reproduce",
        "planar",
        "--budget",
        "quick",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["verdict"] == "match"));
}

#[test]
fn fixture_store_verifies() {
    let (code, out) = cozero(&["verify", "fixtures"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 30);
    assert!(out.lines().all(|l| l.starts_with("ok")));
}
