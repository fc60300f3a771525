use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use spectra::document::AlgebraDocument;
use spectra_core::hom;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env_remove("SPECTRA_MAX_CARRIER")
        .output()
        .unwrap()
}

fn spectra_on(file: &Path, cmd: &[&str], extra: &[&str]) -> Output {
    let mut args: Vec<&str> = cmd.to_vec();
    args.push(file.to_str().unwrap());
    args.extend_from_slice(extra);
    spectra(&args)
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let out = spectra_on(&golden("c3.json"), &["validate"], &[]);
    assert_eq!(out.status.code(), Some(0));

    let broken = write_temp(
        "nonassoc.json",
        r#"{"kind":"monoid","labels":["1","a","b","c"],
            "table":[["1","a","b","c"],["a","a","a","a"],["b","a","b","a"],["c","a","a","b"]],
            "unit":"1"}"#,
    );
    let out = spectra_on(&broken, &["validate"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(
        msg.contains("associative") && msg.contains("(b, c, c)"),
        "{msg}"
    );

    let truncated = write_temp("truncated.json", r#"{"kind":"monoid","labels":["1"],"tab"#);
    assert_eq!(
        spectra_on(&truncated, &["validate"], &[]).status.code(),
        Some(1)
    );
    assert_eq!(
        spectra(&["validate", "/nonexistent/file.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(spectra(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn spec_shapes() {
    let c3 = json(&spectra_on(&golden("c3.json"), &["spec"], &[]));
    assert_eq!(c3["points"].as_array().unwrap().len(), 2);
    assert_eq!(c3["specialization"], serde_json::json!([[0, 1]]));
    let z6 = json(&spectra_on(&golden("zmod6.json"), &["spec"], &[]));
    assert_eq!(z6["points"].as_array().unwrap().len(), 2);
    assert!(z6["specialization"].as_array().unwrap().is_empty());
    let t = json(&spectra_on(&golden("trivial.json"), &["spec"], &[]));
    assert_eq!(t["points"], serde_json::json!([[]]));

    let dot = spectra_on(&golden("c3.json"), &["spec"], &["--format", "dot"]);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.starts_with("digraph spectrum {") && dot.ends_with("}\n"));
    assert!(dot.contains("p0 -> p1;"));
}

#[test]
fn carrier_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(["spec", golden("zmod6.json").to_str().unwrap()])
        .env("SPECTRA_MAX_CARRIER", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(["spec", golden("zmod6.json").to_str().unwrap()])
        .env("SPECTRA_MAX_CARRIER", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn localize_examples() {
    let out = json(&spectra_on(
        &golden("c3.json"),
        &["localize"],
        &["--at", "x"],
    ));
    assert_eq!(out["labels"], serde_json::json!(["1"]));
    let out = json(&spectra_on(
        &golden("zmod6.json"),
        &["localize"],
        &["--at", "2"],
    ));
    assert_eq!(out["kind"], "ring");
    assert_eq!(out["labels"].as_array().unwrap().len(), 3);
    assert_eq!(out["inverses"], serde_json::json!([["2", "2"]]));

    for (file, unit) in [
        ("c3.json", "1"),
        ("zmod6.json", "1"),
        ("adjoin_zero_idem.json", "1"),
    ] {
        let input = AlgebraDocument::from_json(&std::fs::read_to_string(golden(file)).unwrap())
            .unwrap()
            .to_algebra()
            .unwrap();
        let out = spectra_on(&golden(file), &["localize"], &["--at", unit]);
        let echoed = AlgebraDocument::from_json(std::str::from_utf8(&out.stdout).unwrap())
            .unwrap()
            .to_algebra()
            .unwrap();
        assert!(echoed.same_tables(&input));
        assert_eq!(echoed.labels(), input.labels());
    }

    let out = json(&spectra_on(
        &golden("adjoin_zero_idem.json"),
        &["localize"],
        &["--set", "x"],
    ));
    assert_eq!(out["labels"], serde_json::json!(["1", "0"]));
}

#[test]
fn localize_round_trip() {
    for (file, f) in [
        ("c3.json", "x"),
        ("zmod6.json", "2"),
        ("zmod6.json", "3"),
        ("adjoin_zero_idem.json", "x"),
    ] {
        let first = spectra_on(&golden(file), &["localize"], &["--at", f]);
        let text = String::from_utf8(first.stdout).unwrap();
        let path = write_temp(&format!("loc-{file}-{f}"), &text);
        assert_eq!(spectra_on(&path, &["validate"], &[]).status.code(), Some(0));

        let doc: Value = serde_json::from_str(&text).unwrap();
        let image = doc["morphism"]
            .as_array()
            .unwrap()
            .iter()
            .find(|pair| pair[0] == f)
            .unwrap()[1]
            .as_str()
            .unwrap()
            .to_owned();
        let again = spectra_on(&path, &["localize"], &["--at", &image]);
        let a = AlgebraDocument::from_json(&text)
            .unwrap()
            .to_algebra()
            .unwrap();
        let b = AlgebraDocument::from_json(std::str::from_utf8(&again.stdout).unwrap())
            .unwrap()
            .to_algebra()
            .unwrap();
        assert!(hom::find_isomorphism(&a, &b).is_some(), "{file} at {f}");
    }
}

#[test]
fn filter_examples() {
    let c3 = golden("c3.json");
    let out = json(&spectra_on(
        &c3,
        &["filter", "contains"],
        &["--gen", "x", "--ideal", "x2"],
    ));
    assert_eq!(out["contains"], true);
    let out = json(&spectra_on(
        &c3,
        &["filter", "contains"],
        &["--gen", "1", "--ideal", "x2"],
    ));
    assert_eq!(out["contains"], false);
    let out = json(&spectra_on(&c3, &["filter", "primes"], &["--gen", "1"]));
    assert_eq!(out["primes"], serde_json::json!([]));
    let out = json(&spectra_on(&c3, &["filter", "primes"], &["--gen", "x"]));
    assert_eq!(out["primes"], serde_json::json!([["x", "x2"]]));

    let out = json(&spectra_on(
        &c3,
        &["filter", "equal"],
        &[
            "--gen",
            "x",
            "--other",
            "x2",
            "--form",
            "element",
            "--other-form",
            "localization",
        ],
    ));
    assert_eq!(out["equal"], true);

    let out = json(&spectra_on(&c3, &["filter", "audit"], &["--gen", "x"]));
    assert_eq!(out["passed"], true);
    let out = json(&spectra_on(&c3, &["filter", "audit"], &["--member", "x"]));
    assert_eq!(out["passed"], false);
    assert!(out["violation"].as_str().unwrap().contains("whole"));
    let out = json(&spectra_on(
        &c3,
        &["filter", "audit"],
        &["--member", "whole", "--member", "x2"],
    ));
    assert_eq!(out["passed"], false);
    assert!(!out["violation"].is_null());
}

#[test]
fn cover_examples() {
    let out = json(&spectra_on(
        &golden("zmod6.json"),
        &["cover"],
        &["--target", "whole", "--by", "2,3"],
    ));
    assert_eq!(out["covered"], true);
    assert!(out["witness"].is_null());
    let out = json(&spectra_on(
        &golden("c3.json"),
        &["cover"],
        &["--target", "whole", "--by", "x"],
    ));
    assert_eq!(out["covered"], false);
    assert_eq!(out["witness"], serde_json::json!(["x", "x2"]));
    let out = json(&spectra_on(
        &golden("c3.json"),
        &["cover"],
        &["--target", "x", "--by", "1"],
    ));
    assert_eq!(out["covered"], true);
}

#[test]
fn compare_examples() {
    for file in [
        "trivial.json",
        "c3.json",
        "adjoin_zero_idem.json",
        "zmod6.json",
    ] {
        assert_eq!(
            json(&spectra_on(&golden(file), &["compare"], &[]))["agrees"],
            true
        );
    }
    let z12 = write_temp("z12.json", r#"{"kind":"ring","expr":"zmod(12)"}"#);
    assert_eq!(json(&spectra_on(&z12, &["compare"], &[]))["agrees"], true);
}

#[test]
fn product_labels_on_the_command_line() {
    let m2 = write_temp(
        "m2.json",
        r#"{"kind":"monoid","expr":"product(idem,idem)"}"#,
    );
    let out = json(&spectra_on(
        &m2,
        &["cover"],
        &["--target", "whole", "--by", "(1,x),(x,1)"],
    ));
    assert_eq!(out["covered"], false);
    assert_eq!(
        out["witness"],
        serde_json::json!(["(1,x)", "(x,1)", "(x,x)"])
    );
}

#[test]
fn output_is_stable() {
    let path = golden("adjoin_zero_idem.json");
    let path = path.to_str().unwrap();
    for args in [vec!["spec", path], vec!["localize", path, "--at", "x"]] {
        assert_eq!(spectra(&args).stdout, spectra(&args).stdout);
    }
}
