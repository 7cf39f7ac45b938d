//! End-to-end runs of the `sga` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn sga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sga")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn fixture_suites_pass() {
    for suite in ["pauli", "dirac"] {
        let out = sga(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let v = stdout_json(&out);
        assert_eq!(v["passed"], true);
        assert_eq!(v["suites"][0]["suite"], suite);
    }
    let text = sga(&["verify", "--suite", "exclusion", "--cases", "10", "--format", "text"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(String::from_utf8(text.stdout).unwrap().lines().all(|l| l.starts_with("PASS") || l.starts_with(' ')));
}

#[test]
fn row_times_column_is_minus_one() {
    let out = sga(&["eval", "e[d]' e[u]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["species"], "scalar");
    assert_eq!(v["display"], "-1");
    let text = sga(&["eval", "--format", "text", "--k", "4", "e[dd]' g[1] e[ud]"]);
    assert_eq!(text.status.code(), Some(0));
}

#[test]
fn forbidden_products() {
    // a column times a column is not in the algebra
    let out = sga(&["eval", "e[u] e[d]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = sga(&["eval", "--forbidden-as-zero", "e[u] e[d]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["species"], "zero");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["build", "--k", "x"],
        &["verify", "--suite", "nope"],
        &["eval", "g[9]"],
        &["build", "--k", "20"],
        &["tables", "--format", "text"],
    ] {
        assert_eq!(sga(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(sga(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["--seed", "7", "verify", "--suite", "trace", "--cases", "5"];
    let a = sga(&args);
    let b = sga(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(sga(&["build", "--k", "3", "--m", "1"]).stdout, sga(&["build", "--k", "3", "--m", "1"]).stdout);
}

#[test]
fn tables_csv() {
    let out = sga(&["tables", "--kind", "metric", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("N,K,M,standard,alternative\n"));
    assert!(text.contains("\n3,3,0,-,-\n"));
    assert!(text.contains("\n4,4,0,-,-\n"));
    assert_eq!(text.lines().count(), 18);
    let json = stdout_json(&sga(&["tables", "--format", "json"]));
    assert_eq!(json.as_array().unwrap().len(), 3);
    for t in json.as_array().unwrap() {
        assert_eq!(t["period8"]["violations"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn build_json() {
    let out = sga(&["build", "--k", "3", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    for key in ["config", "C"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["config"]["dim"], 4);
}

#[test]
fn decompose_file() {
    let path = std::env::temp_dir().join(format!("sga-decompose-{}.json", std::process::id()));
    std::fs::write(&path, "[[1, 0], [0, -1]]").unwrap();
    let out = sga(&["decompose", "--k", "2", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["reconstructs"], true);
    assert_eq!(v["blades"].as_object().unwrap().len(), 1);
    assert_eq!(v["outer_products"].as_object().unwrap().len(), 2);
    assert_eq!(sga(&["decompose", "--input", "/nonexistent/m.json"]).status.code(), Some(2));
}

#[test]
fn reflections_and_rotations() {
    let out = sga(&["classify-reflection", "--k", "3", "--m", "1", "--axes", "2", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "P");
    let r = stdout_json(&sga(&["rotate", "--k", "3", "--plane", "1", "--angle", "pi/2", "--apply", "o[1]"]));
    assert_eq!(r["scalar"], "exact");
    assert_eq!(r["metric_preserved"], true);
    assert_eq!(r["rotated"]["species"], "multivector");
    let f = stdout_json(&sga(&["rotate", "--k", "3", "--m", "1", "--axes", "1,3", "--angle", "0.3"]));
    assert_eq!(f["scalar"], "float");
    assert_eq!(f["metric_preserved"], true);
    // vectors are real in (3,1); in (3,0) conjugation flips their sign
    assert_eq!(stdout_json(&sga(&["conjugate", "--k", "3", "--m", "1", "o[1]"]))["real"], true);
    assert_eq!(stdout_json(&sga(&["conjugate", "--k", "3", "o[1]"]))["real"], false);
    assert_eq!(stdout_json(&sga(&["conjugate", "--k", "3", "i o[1]"]))["real"], true);
}
