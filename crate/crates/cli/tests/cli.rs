use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn momentcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_momentcut"))
        .args(args)
        .env_remove("MOMENTCUT_MAX_RANK")
        .output()
        .expect("binary runs")
}

fn run(cmd: &str, file: &str, extra: &[&str]) -> (i32, Value, String) {
    let path = fixture(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = momentcut(&args);
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        report,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn check_delzant_exit_codes() {
    let (code, report, _) = run("check-delzant", "square.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(report["is_delzant"], true);

    let (code, report, stderr) = run("check-delzant", "non_smooth.json", &[]);
    assert_eq!(code, 1);
    let bad: Vec<&Value> = report["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["smooth"] == false)
        .collect();
    assert!(bad.iter().any(|v| v["vertex"] == serde_json::json!(["0", "0"])));
    assert!(stderr.contains("(0,0)"));

    let (code, _, stderr) = run("check-delzant", "bad_rational.json", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("polytope.halfspaces[1].offset"), "{stderr}");
}

#[test]
fn subdivide_counts() {
    let (code, report, _) = run("subdivide", "product.json", &[]);
    assert_eq!(code, 0);
    let pieces = report["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 7);
    let triple = pieces
        .iter()
        .find(|p| p["indices"] == serde_json::json!([1, 2, 3]))
        .unwrap();
    assert_eq!(triple["vertices"], serde_json::json!([["0", "0"]]));

    let (_, report, _) = run("subdivide", "two_cut.json", &[]);
    assert_eq!(report["pieces"].as_array().unwrap().len(), 3);
    let (_, report, _) = run("subdivide", "square.json", &[]);
    assert_eq!(report["pieces"].as_array().unwrap().len(), 1);

    let (_, from_cocycle, _) = run("subdivide", "two_cut_cocycle.json", &[]);
    let (_, from_cuts, _) = run("subdivide", "two_cut.json", &[]);
    assert_eq!(from_cocycle["pieces"], from_cuts["pieces"]);
}

#[test]
fn figures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("product.svg");
    let (code, _, _) = run("subdivide", "product.json", &["--svg", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("<polygon"));
    assert!(svg.contains("(-2,-1)"));

    let out4 = dir.path().join("tesseract.svg");
    let (code, report, stderr) =
        run("subdivide", "tesseract.json", &["--svg", out4.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(!report["pieces"].as_array().unwrap().is_empty());
    assert!(!out4.exists());
    assert!(stderr.contains("rank 4"));

    let lifted = dir.path().join("lift.svg");
    let json = dir.path().join("lift.json");
    let (code, report, _) = run(
        "lift",
        "two_cut.json",
        &["--svg", lifted.to_str().unwrap(), "--json", json.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&lifted).unwrap().contains("u = 2"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(written, report);
}

#[test]
fn check_regular_verdicts() {
    let (code, report, _) = run("check-regular", "two_cut.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(report["agreement"], true);

    let (code, report, _) = run("check-regular", "product.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(report["lattice_criterion"], true);

    let (code, report, stderr) = run("check-regular", "non_primitive.json", &[]);
    assert_eq!(code, 1);
    assert_eq!(
        report["definitional"]["primitivity_failures"],
        serde_json::json!([[1, 2]])
    );
    assert_eq!(report["lattice_criterion"], false);
    assert!(stderr.contains("xi_12 not primitive"));
}

#[test]
fn lift_reports() {
    let (code, report, _) = run("lift", "hirzebruch.json", &["--a", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["polytope"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(report["delzant"], true);
    assert_eq!(report["fibration"]["compatible"], true);
    assert_eq!(report["surface"], "Hirzebruch(1)");

    let (code, report, _) = run("lift", "product.json", &["--a", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["polytope"]["dim"], 3);

    let (code, report, stderr) = run("lift", "product.json", &["--a", "-5"]);
    assert_eq!(code, 1);
    assert_eq!(report["bound"], "2");
    assert!(stderr.contains("bound 2"));

    // Without --a the file's value or bound + 1 is used.
    let (_, report, _) = run("lift", "two_cut.json", &[]);
    assert_eq!(report["a"], "2");
    let (_, report, _) = run("lift", "product.json", &[]);
    assert_eq!(report["a"], "3");
}

#[test]
fn degree_tables() {
    let (code, report, _) = run("degrees", "product.json", &[]);
    assert_eq!(code, 0);
    let mut table: Vec<(u64, u64, u64, i64)> = report["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["between"][0].as_u64().unwrap(),
                e["between"][1].as_u64().unwrap(),
                e["in_piece"].as_u64().unwrap(),
                e["degree"].as_i64().unwrap(),
            )
        })
        .collect();
    table.sort();
    assert_eq!(
        table,
        [(1, 2, 1, 0), (1, 2, 2, -1), (1, 3, 1, 0), (1, 3, 3, -1), (2, 3, 2, -1), (2, 3, 3, 0)]
    );

    let (code, report, _) = run("degrees", "square.json", &[]);
    assert_eq!(code, 0);
    let edges = report["pieces"][0]["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 4);
    assert!(edges.iter().all(|e| e["degree"] == 0));

    let (code, report, _) = run("degrees", "two_cut.json", &[]);
    assert_eq!(code, 1);
    assert_eq!(report["error"], "NotDim2");
}

#[test]
fn rank_cap_from_environment() {
    let path = fixture("product.json");
    let out = Command::new(env!("CARGO_BIN_EXE_momentcut"))
        .args(["subdivide", path.to_str().unwrap()])
        .env("MOMENTCUT_MAX_RANK", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MOMENTCUT_MAX_RANK"));
}

#[test]
fn usage_errors() {
    assert_eq!(momentcut(&["lift"]).status.code(), Some(2));
    let missing = momentcut(&["subdivide", "/nonexistent/job.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let path = fixture("hirzebruch.json");
    let bad_a = momentcut(&["lift", path.to_str().unwrap(), "--a", "1/0"]);
    assert_eq!(bad_a.status.code(), Some(2));
}
