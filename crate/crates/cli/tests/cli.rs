use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn analyze(file: &Path, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_analyze"))
        .arg(file)
        .args(extra)
        .output()
        .expect("binary runs")
}

fn write_input(dir: &tempfile::TempDir, text: &str) -> PathBuf {
    let p = dir.path().join("input.jsonl");
    std::fs::write(&p, text).unwrap();
    p
}

fn machine_reports(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn machine_output_matches_golden() {
    let out = analyze(&golden("fixtures.jsonl"), &["--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read_to_string(golden("fixtures.machine")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn text_output_matches_golden() {
    let out = analyze(&golden("fixtures.jsonl"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read_to_string(golden("fixtures.text")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn fixture_contents() {
    let out = analyze(&golden("fixtures.jsonl"), &["--format", "machine"]);
    let r = machine_reports(&out);
    assert_eq!(r[0]["quotient"]["closed_form"]["text"], "(1 + 4t^2 + 4t^4 + t^6) / (1-t^2)^6");
    assert_eq!(r[0]["gorenstein"]["a_invariant"], -6);
    assert_eq!(r[1]["quotient"]["closed_form"]["text"], "(1 + t^2) / (1-t^2)^2");
    assert_eq!(r[1]["gorenstein"]["graded_gorenstein"], true);
    assert_eq!(r[1]["oracle"]["agrees"], true);
    assert_eq!(r[2]["quotient"]["closed_form"]["text"], "1");
    assert_eq!(r[2]["reduction"]["kept_columns"], Value::Array(vec![]));
    assert_eq!(r[3]["quotient"]["truncated"][2], 6);
    assert_eq!(r[3]["classification"]["one_large"], false);
}

#[test]
fn text_and_machine_agree_on_numbers() {
    let m = analyze(&golden("fixtures.jsonl"), &["--format", "machine"]);
    let t = String::from_utf8(analyze(&golden("fixtures.jsonl"), &[]).stdout).unwrap();
    for r in machine_reports(&m) {
        let q = &r["quotient"];
        assert!(t.contains(q["closed_form"]["text"].as_str().unwrap()));
        let coeffs: Vec<String> = q["truncated"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
        assert!(t.contains(&format!("truncated: {}", coeffs.join(", "))));
    }
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "{\"kind\":\"sl2\",\"irreps\":[3,1],\"degree\":30}\n");
    let a = analyze(&p, &["--format", "machine", "--seed", "17"]);
    let b = analyze(&p, &["--format", "machine", "--seed", "17"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("timing"));
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timing"));
}

#[test]
fn schema_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "{\"kind\":\"sl2\",\"irreps\":[1]}\n{\"kind\":\"sl2\",\"weights\":[[1]]}\n");
    let out = analyze(&p, &[]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("weights"), "{err}");
}

#[test]
fn capacity_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let row: Vec<&str> = (0..18).map(|j| if j % 2 == 0 { "1" } else { "-1" }).collect();
    let p = write_input(&dir, &format!("{{\"kind\":\"torus\",\"weights\":[[{}]]}}\n", row.join(",")));
    let out = analyze(&p, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
}

#[test]
fn reconstruction_failure_still_prints_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "{\"kind\":\"sl2\",\"irreps\":[2,2]}\n");
    let out = analyze(&p, &["--format", "machine", "--denominator", "2,2"]);
    assert_eq!(out.status.code(), Some(3));
    let r = &machine_reports(&out)[0];
    assert_eq!(r["status"], "reconstruction_failed");
    assert_eq!(r["quotient"]["truncated"].as_array().unwrap().len(), 25);
}

#[test]
fn flags_override_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "{\"kind\":\"sl2\",\"irreps\":[2,1],\"degree\":10}\n");
    let out = analyze(&p, &["--format", "machine", "--degree", "30", "--denominator", "2,2,3,6", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &machine_reports(&out)[0];
    assert_eq!(r["degree"], 30);
    assert_eq!(r["quotient"]["source"], "supplied");
    assert_eq!(r["quotient"]["closed_form"]["denominator"], serde_json::json!([2, 2, 3, 6]));
    assert_eq!(r["oracle"]["agrees"], true);
}

#[test]
fn json_array_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, r#"[{"kind":"torus","weights":[[1,-1]]},{"kind":"sl2","irreps":[0]}]"#);
    let out = analyze(&p, &["--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let r = machine_reports(&out);
    assert_eq!(r.len(), 2);
    assert_eq!(r[1]["quotient"]["closed_form"]["text"], "1 / (1-t)^2");
}
