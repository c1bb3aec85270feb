//! End-to-end checks of the binary: exit codes, output determinism, and the
//! documented example invocations.

use std::process::Command;

fn symdom(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_symdom"))
        .args(args)
        .output()
        .expect("spawn symdom")
}

fn stdout(args: &[&str]) -> String {
    let out = symdom(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_matches_documented_quadruples() {
    let text = stdout(&["classify", "--family", "bc", "--l", "4", "--r", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let real = &v["result"]["real_quadruple"];
    assert_eq!(real["rank"], 2);
    assert_eq!(real["iota_minus_1"], "3");
    assert_eq!(real["a"], "4");
    assert_eq!(real["two_b"], "8");
    let complex = &v["result"]["complex_triple"];
    assert_eq!(complex["rank"], 4);
    assert_eq!(complex["a"], "2");
    assert_eq!(complex["two_b"], "8");
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "scan",
        "--setting",
        "restriction",
        "--hkind",
        "so",
        "--l",
        "10",
        "--r",
        "2",
        "--nu",
        "2",
        "--max-degree",
        "40",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let c = stdout(&[
        "jack",
        "--partition",
        "3,1",
        "--alpha",
        "1/2",
        "--rank",
        "3",
    ]);
    let d = stdout(&[
        "jack",
        "--partition",
        "3,1",
        "--alpha",
        "1/2",
        "--rank",
        "3",
    ]);
    assert_eq!(c, d);
}

#[test]
fn scan_restriction_so_example() {
    let text = stdout(&[
        "scan",
        "--setting",
        "restriction",
        "--hkind",
        "so",
        "--l",
        "10",
        "--r",
        "2",
        "--nu",
        "2",
        "--max-degree",
        "60",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let certs = v["result"]["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0]["k"], 0);
    assert_eq!(certs[0]["sigma"], "2");
    assert!(certs[0]["norm_square"]["value"].as_f64().unwrap() > 0.0);
}

#[test]
fn scan_csv_has_versioned_header() {
    let text = stdout(&[
        "--format",
        "csv",
        "scan",
        "--setting",
        "tensor",
        "--l",
        "7",
        "--r",
        "2",
        "--nu",
        "2",
        "--max-degree",
        "40",
    ]);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# symdom scan csv v1");
    assert!(lines.next().unwrap().starts_with("# config:"));
    assert!(lines.next().unwrap().starts_with("setting,rule,"));
    assert_eq!(lines.count(), 1);
}

#[test]
fn usage_errors_exit_one() {
    let out = symdom(&["hyper", "--alpha", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = symdom(&["nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    let out = symdom(&["--format", "csv", "classify", "--family", "d1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn domain_errors_exit_two() {
    // divergent at-one request
    let out = symdom(&[
        "hyper", "--alpha", "2,2", "--beta", "3", "--rank", "2", "--mult-a", "2", "--at-one",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("boundedness"), "stderr: {msg}");
    // nu outside the Wallach set
    let out = symdom(&[
        "scan",
        "--setting",
        "tensor",
        "--l",
        "7",
        "--r",
        "2",
        "--nu",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spherical_rank_one_reports_quadrature() {
    let text = stdout(&[
        "spherical",
        "--family",
        "su",
        "--l",
        "1",
        "--r",
        "1",
        "--sigma",
        "1",
        "--t",
        "0.5",
        "--max-degree",
        "200",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let val = v["result"]["value"]["value"].as_f64().unwrap();
    let quad = v["result"]["rank_one_quadrature"].as_f64().unwrap();
    assert!((val - 1.0).abs() < 1e-10);
    assert!((quad - 1.0).abs() < 1e-10);
}

#[test]
fn norm_reports_both_bergman_routes() {
    let text = stdout(&[
        "norm",
        "--family",
        "so",
        "--l",
        "6",
        "--r",
        "2",
        "--partition",
        "2,1",
        "--nu",
        "7/2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["induced_partition"], "4,2");
    assert_eq!(v["result"]["bergman"]["agree"], true);
}

#[test]
fn extended_precision_reports_exact_value() {
    let text = stdout(&[
        "--precision",
        "extended",
        "hyper",
        "--alpha",
        "0,5",
        "--beta",
        "3",
        "--rank",
        "2",
        "--mult-a",
        "2",
        "--at-one",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["at_one"]["value_exact"], "1");
    assert_eq!(v["result"]["at_one"]["value"], 1.0);
}
