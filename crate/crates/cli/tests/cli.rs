use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellsurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/output.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the keys a schema definition marks as required, descending into array items.
fn assert_required(schema: &Value, def: &str, v: &Value) {
    let d = &schema["$defs"][def];
    let (d, items): (&Value, Vec<&Value>) = if d["type"] == "array" {
        (&d["items"], v.as_array().expect("array payload").iter().collect())
    } else {
        (d, vec![v])
    };
    for item in items {
        for key in d["required"].as_array().unwrap() {
            let key = key.as_str().unwrap();
            assert!(item.get(key).is_some(), "{def}: missing `{key}` in {item}");
        }
    }
}

#[test]
fn classify_cover_example() {
    let v = json(&["classify", "--alpha", "1", "--beta", "2"]);
    assert_eq!(v["J0"], "111284641/23804641");
    assert_eq!(v["case"], "generic");
    let types: Vec<&str> = v["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["I1", "II", "III", "I0*"]);
    assert_eq!(v["euler_sum"], 12);
    assert_required(&schema(), "classify", &v);
}

#[test]
fn classify_vertex_limit() {
    let v = json(&["classify", "--alpha", "1", "--beta", "0"]);
    let types: Vec<&str> = v["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["I1", "II", "III*"]);
    assert_eq!(v["case"], "v_zero");
}

#[test]
fn classify_key_order() {
    let out = run(&["classify", "--a", "1", "--b", "3"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let pos: Vec<usize> = ["\"params\"", "\"J0\"", "\"case\"", "\"fibers\"", "\"euler_sum\"", "\"minimal\""]
        .iter()
        .map(|k| s.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
}

#[test]
fn section_class() {
    let v = json(&["section", "--n", "1,1,0"]);
    assert_eq!(v["class"], serde_json::json!([1, 0, 0, 0, -1, -1, 0, 0, 0, 0]));
    assert_eq!(v["class_text"], "l - e4 - e5");
    assert_eq!(v["numerical_section"], true);
    assert_required(&schema(), "section", &v);
}

#[test]
fn mw_certificate() {
    let v = json(&["mw", "--add", "1,0,0", "0,1,0"]);
    assert_eq!(v["sum"], serde_json::json!([1, 1, 0]));
    assert!(v["certificate"].is_object());
    assert_required(&schema(), "mw", &v);
}

#[test]
fn fibers_cases() {
    let s = schema();
    for case in ["generic", "e-zero", "f-zero", "v-zero"] {
        let v = json(&["fibers", "--case", case]);
        assert_eq!(v["case"], case.replace('-', "_"));
        assert_required(&s, "fibers", &v);
    }
}

#[test]
fn molien_and_table() {
    let s = schema();
    let v = json(&["molien", "--group", "octahedral", "--degree", "12"]);
    assert_eq!(v["matches_closed_form"], true);
    assert_eq!(v["coefficients"][8], "1");
    assert_required(&s, "molien", &v);
    let t = json(&["group-table"]);
    assert_eq!(t.as_array().unwrap().len(), 24);
    assert_eq!(t[0]["images"], serde_json::json!(["+V1", "+V2", "+V3"]));
    assert_required(&s, "group-table", &t);
}

#[test]
fn eval_section_on_curve() {
    let v = json(&["eval-section", "--alpha", "1", "--beta", "2", "--s", "1", "--t", "3", "--pair", "12", "--sign", "-"]);
    assert_eq!(v["on_curve"], true);
    assert_eq!(v["sign"], -1);
    assert_required(&schema(), "eval-section", &v);
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify", "--suite", "all"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r["passed"] == true));
    assert_required(&schema(), "verify", &v);
}

#[test]
fn meta_wrapper() {
    let v = json(&["--meta", "section", "--n", "0,0,1"]);
    assert_eq!(v["meta"]["command"], "section");
    assert!(v["meta"]["timestamp"].as_u64().is_some());
    assert_required(&schema(), "wrapped", &v);
    assert_required(&schema(), "section", &v["data"]);
}

#[test]
fn output_is_byte_stable() {
    let args = ["classify", "--alpha", "1+i", "--beta", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--format", "text", "group-table"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_format() {
    let out = run(&["--format", "text", "verify", "--suite", "molien"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("PASS molien"), "{s}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["classify", "--alpha", "0", "--beta", "0"]), Some(2));
    assert_eq!(code(&["classify", "--a", "0", "--b", "0"]), Some(2));
    assert_eq!(code(&["classify", "--alpha", "1"]), Some(2));
    assert_eq!(code(&["section", "--n", "1,2"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(2));
    assert_eq!(code(&["--bogus"]), Some(2));
    assert_eq!(code(&["classify", "--alpha", "x", "--beta", "1"]), Some(2));
    // vertex of the octahedron: V1 V2 V3 vanishes
    assert_eq!(code(&["eval-section", "--alpha", "1", "--beta", "0", "--s", "1", "--t", "2", "--pair", "12"]), Some(2));
    assert_eq!(code(&["eval-section", "--alpha", "1", "--beta", "2", "--s", "1", "--t", "2", "--pair", "14"]), Some(2));
}

#[test]
fn negative_indices() {
    let v = json(&["mw", "--add", "1,2,3", "-1,0,4"]);
    assert_eq!(v["sum"], serde_json::json!([0, 2, 7]));
    let v = json(&["section", "--n", "-1,0,0"]);
    assert_eq!(v["index"], serde_json::json!([-1, 0, 0]));
}

#[test]
fn e_zero_point_in_field() {
    // alpha/beta a primitive eighth root of unity
    let v = json(&["classify", "--alpha", "1+i", "--beta", "r2"]);
    assert_eq!(v["case"], "e_zero");
    assert_eq!(v["J0"], "inf");
    let types: Vec<&str> = v["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["I1*", "II", "III"]);
}
