use std::process::{Command, Output};

use serde_json::Value;

fn rk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rk")).args(args).output().expect("rk runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn continued_fraction() {
    let v = json(&rk(&["cf", "225", "94"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["terms"], serde_json::json!([2, 2, 2, -6, -2, 2]));
}

#[test]
fn alexander_and_fox_milnor() {
    let v = json(&rk(&["alex", "3", "1"]));
    assert_eq!(v["fox_milnor"]["passes"], false);
    let v = json(&rk(&["alex", "9", "2"]));
    assert_eq!(v["fox_milnor"]["passes"], true);
}

#[test]
fn run_gives_verdict_without_floats() {
    let v = json(&rk(&["run", "225", "94"]));
    assert_eq!(v["verdict"], "not topologically slice (twisted Alexander, k=5)");
    assert!(!has_float(&v));
    let v = json(&rk(&["run", "9", "2"]));
    assert_eq!(v["verdict"], "in ribbon family R; no obstruction");
    assert!(!has_float(&v));
}

#[test]
fn obstruct_respects_k_and_r_bound() {
    let v = json(&rk(&["obstruct", "1225", "466", "--k", "7", "--r-bound", "30"]));
    assert_eq!(v["verdict"]["kind"], "not_topologically_slice");
    let v = json(&rk(&["obstruct", "1225", "466", "--k", "7", "--r-bound", "28"]));
    assert_eq!(v["verdict"]["kind"], "inconclusive");
}

#[test]
fn bad_input_exits_with_one() {
    for args in [
        &["cf", "10", "4"][..],
        &["cf", "9", "0"],
        &["twisted", "9", "2", "--k", "5"],
        &["frobnicate"],
        &["cf", "x", "1"],
    ] {
        let out = rk(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(rk(&["--help"]).status.code(), Some(0));
}

#[test]
fn survey_formats_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = rk(&["survey", "15", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("schema_version,m,classes,cg_fake,alexander_norm,cg_fake_q"));
    assert!(lines.next().unwrap().starts_with("1,15,"));

    let v = json(&rk(&["survey", "15", "--jobs", "2"]));
    assert_eq!(v[0]["schema_version"], 1);
    assert_eq!(v[0]["cg_fake"], 2);
    assert_eq!(v[0]["alexander_norm"], 1);
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("rows.json");
    let cfg = dir.path().join("rk.conf");
    std::fs::write(&cfg, format!("# test\nr_bound = 30\njobs = 2\njson_out = {}\n", json_path.display())).unwrap();
    let out = rk(&["--config", cfg.to_str().unwrap(), "survey", "15", "--format", "csv"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v[0]["m"], 15);

    std::fs::write(&cfg, "colour = red\n").unwrap();
    let out = rk(&["--config", cfg.to_str().unwrap(), "cf", "9", "2"]);
    assert_eq!(out.status.code(), Some(1));
}
