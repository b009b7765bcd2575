//! Exit codes and schema conformance of the binary's JSON output.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammacert")).args(args).output().expect("binary runs")
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(schema_name: &str, out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let s = schema(schema_name);
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{schema_name}: {msgs:?}");
    }
    v
}

#[test]
fn gamma_output_validates() {
    let out = run(&["gamma", "C~", "6; 0-1, 0-2, 0-3, 1-2, 1-3, 2-3, 3-4, 4-5"]);
    let v = assert_valid("gamma.schema.json", &out);
    assert_eq!(v["graphs"][0]["exact"], "4");
    let g = v["graphs"][1]["value"]["lo_f64"].as_f64().unwrap();
    assert!((g - 4.8777978).abs() < 1e-6);
}

#[test]
fn gamma_of_e6_hat_is_six() {
    // Ê₆: center 0 with three arms of length two.
    let out = run(&["gamma", "7; 0-1, 1-2, 0-3, 3-4, 0-5, 5-6"]);
    let v = assert_valid("gamma.schema.json", &out);
    assert_eq!(v["graphs"][0]["exact"], "6");
}

#[test]
fn table_outputs_validate() {
    let v = assert_valid("table.schema.json", &run(&["tables", "graphs", "--n", "5", "--top", "3"]));
    let top = v["rows"][0]["gamma"]["value"]["lo_f64"].as_f64().unwrap();
    assert!((top - 4.38971).abs() < 1e-4);
    let v = assert_valid("table.schema.json", &run(&["tables", "beta-d"]));
    let d9 = v["rows"].as_array().unwrap().iter().find(|r| r["d"] == 9).unwrap();
    assert!((d9["beta_d"].as_f64().unwrap() - 6.660).abs() < 1e-3);
    assert_valid("table.schema.json", &run(&["curves", "--samples", "5"]));
}

#[test]
fn counts_row_for_nine_vertex_trees() {
    let v = assert_valid("table.schema.json", &run(&["tables", "counts"]));
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["kind"] == "tree" && r["n"] == 9).unwrap();
    assert_eq!(row["below"], 32);
}

#[test]
fn stage_output_validates_and_expectations_gate_exit() {
    let dir = std::env::temp_dir().join(format!("gammacert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("stage.json");
    let out = run(&[
        "kernel-stage",
        "graphs",
        "--beta",
        "21/4",
        "--expect",
        "survivors=1,direct=150,handled=4",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(schema("stage.schema.json").is_valid(&v));
    assert!(out_path.with_extension("md").exists());

    let out = run(&["kernel-stage", "trees", "--expect", "direct=190"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("direct: expected 190, got 191"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["gamma", "4; 0-1, 2-3"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "not a graph!"]).status.code(), Some(2));
    assert_eq!(run(&["kernel-stage", "graphs", "--beta", "7"]).status.code(), Some(2));
    assert_eq!(run(&["prove", "graphs", "--tamper", "6"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "beta-d", "--d-min", "2"]).status.code(), Some(2));
}

#[test]
fn reruns_are_identical_apart_from_timing() {
    let a = run(&["tables", "trees", "--n", "10", "--format", "csv"]);
    let b = run(&["tables", "trees", "--n", "10", "--format", "csv", "--jobs", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
