use std::process::Command;

use ordpoly::lattice_json::LatticeJson;
use serde_json::Value;

fn ordpoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ordpoly")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        &["shell", "5", "6"][..],
        &["frobnicate", "5", "6", "8"],
        &["shell", "5", "4", "8"],
        &["shell", "6", "7", "9"],
        &["shell", "5", "6", "x"],
        &["hvector", "5", "6", "8", "--method", "fast"],
        &["hvector", "6", "6", "8", "--method", "closed"],
        &["multiplex", "5", "6", "8"],
        &["bijection", "5", "6", "8"],
        &["bijection", "7", "9", "15", "--i", "4"],
        &["shell", "5", "6", "8", "--i", "1"],
        &["shell", "5", "6", "8", "--format", "xml"],
    ] {
        let (code, _, err) = ordpoly(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn face_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordpoly"))
        .args(["verify", "5", "6", "8"])
        .env("ORDPOLY_MAX_FACES", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_ordpoly"))
        .args(["facets", "5", "6", "8"])
        .env("ORDPOLY_MAX_FACES", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let (code, out, _) = ordpoly(&["verify", "5", "5", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("P^{5,5,8}: pass\n"));
    assert!(!out.contains("FAIL"));
    let (code, out, _) = ordpoly(&["verify", "5", "6", "8", "--grid"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches(": pass\n").count(), 2 * 3);
}

#[test]
fn hvector_all_agrees() {
    let (code, out, _) = ordpoly(&["hvector", "5", "6", "8", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("(1,4,7,7,4,1)").count(), 5);
    assert!(out.contains("agreement: pass"));
    let (code, out, _) = ordpoly(&["hvector", "5", "6", "8", "--method", "closed"]);
    assert_eq!(code, 0);
    assert!(out.contains("closed  (1,4,7,7,4,1)"));
}

#[test]
fn text_output_is_byte_stable() {
    for args in [&["shell", "7", "9", "12"][..], &["verify", "5", "7", "9", "--grid"], &["bijection", "7", "8", "14"]] {
        let a = ordpoly(args);
        let b = ordpoly(args);
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a.0, 0);
    }
}

#[test]
fn facets_json_round_trips() {
    let (code, out, _) = ordpoly(&["facets", "5", "6", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 12);
    let lat: LatticeJson = serde_json::from_value(v["lattice"].clone()).unwrap();
    let rebuilt = LatticeJson::from_lattice(&lat.to_lattice(1 << 20).unwrap());
    assert_eq!(rebuilt, lat);
    assert_eq!(serde_json::to_value(&rebuilt).unwrap(), v["lattice"]);
}

#[test]
fn csv_output() {
    let (code, out, _) = ordpoly(&["shell", "5", "6", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("j,F_j,G_j"));
    assert_eq!(lines.next(), Some("1,0 1 2 3 4,"));
    assert_eq!(lines.next(), Some("2,0 1 2 4 5,5"));
}

#[test]
fn bijection_without_i_covers_every_size() {
    let (code, out, _) = ordpoly(&["bijection", "7", "9", "15"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("round trip: pass").count(), 3);
    assert!(out.contains("count: 6 (binomial 6)"));
}
