use std::path::PathBuf;
use std::process::{Command, Output};

use kktheory::groups;
use kktheory::report::{Report, Status};
use serde_json::Value;

fn input(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../inputs")
        .join(name)
}

fn kktheory(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kktheory"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn compute(name: &str, extra: &[&str]) -> Output {
    let path = input(name);
    let mut args = vec!["compute", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    kktheory(&args)
}

fn json(name: &str) -> Value {
    let out = compute(name, &["--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn one_vertex_g_three_json() {
    let v = json("one_vertex_4_4.json");
    assert_eq!(v["schema"], "kkth/1");
    assert_eq!(strings(&v["ku"]), vec!["Z_3"; 8]);
    let ko: Vec<Vec<String>> = v["ko"].as_array().unwrap().iter().map(strings).collect();
    let pattern = ["Z_3", "Z_3", "0", "0", "Z_3", "Z_3", "0", "0"];
    for (q, want) in pattern.iter().enumerate() {
        assert_eq!(ko[q], vec![want.to_string()], "KO_{q}");
    }
    assert!(v["differentials"].as_array().unwrap().is_empty());
    assert_eq!(strings(&v["mu"]), vec!["0"; 8]);
}

#[test]
fn three_vertex_text_grid() {
    let out = compute("three_vertex_n2.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("E2, real part"))
        .skip(3)
        .take(8)
        .collect();
    let cells: Vec<Vec<&str>> = rows
        .iter()
        .map(|r| r.split('|').skip(1).map(str::trim).collect())
        .collect();
    assert_eq!(cells[0], ["Z_2", "Z_2", "0"]);
    assert_eq!(cells[1], ["Z_2", "Z_2 + Z_2", "Z_2"]);
    assert_eq!(cells[2], ["Z_4", "Z_2 + Z_4", "Z_2"]);
    assert_eq!(cells[4], ["Z_2", "Z_2", "0"]);
    assert_eq!(cells[6], ["Z_2", "Z_2", "0"]);
    for q in [3, 5, 7] {
        assert_eq!(cells[q], ["0", "0", "0"]);
    }
    assert!(text.contains("real d2: (2,1) -> (0,2)"));
    assert!(text.contains("if d2=0") && text.contains("if d2≠0"));

    let v = json("three_vertex_n2.json");
    assert_eq!(strings(&v["mu"]), vec!["Z_2"; 8]);
}

#[test]
fn both_d2_variants_for_even_g() {
    let v = json("one_vertex_3_3.json");
    let diag2 = v["diagonals"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["part"] == "real" && d["degree"] == 2)
        .unwrap();
    assert_eq!(diag2["status"]["kind"], "d2");
    let labels: Vec<&str> = diag2["status"]["variants"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["d2=0", "d2≠0"]);
}

#[test]
fn mixed_family_psi_is_identity() {
    for name in ["mixed_three_vertex_n3.json", "mixed_three_vertex_n4.json"] {
        let v = json(name);
        assert_eq!(strings(&v["ku"]), vec!["Z_2"; 8]);
        for psi in v["psi"].as_array().unwrap() {
            assert_eq!(psi["multiplier"], 1);
        }
    }
}

#[test]
fn non_commuting_matrices_exit_two() {
    let out = compute("non_commuting.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("NonCommutingMatrices(1,2)"));
}

#[test]
fn malformed_input_reports_position() {
    let dir = std::env::temp_dir().join(format!("kktheory-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\n  \"k\": 1,\n  \"colors\": 2\n}\n").unwrap();
    let out = kktheory(&["compute", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("ParseError: line 3"), "{err}");
    assert!(err.contains("unknown field `colors`"), "{err}");
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn missing_file_exit_two() {
    let out = kktheory(&["compute", "/nonexistent/input.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tiny_extension_bound_exit_four() {
    let out = compute("three_vertex_n2.json", &["--ext-bound", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BoundExceeded"));
}

#[test]
fn json_round_trips() {
    for name in [
        "one_vertex_3_3.json",
        "three_vertex_n3.json",
        "mixed_three_vertex_n4.json",
    ] {
        let out = compute(name, &["--format", "json", "--emit-intermediate", "--emit-lifts"]);
        assert_eq!(out.status.code(), Some(0));
        let report: Report = serde_json::from_slice(&out.stdout).unwrap();
        let again = kktheory::render(&report, kktheory::Format::Json);
        assert_eq!(again.as_bytes(), out.stdout.as_slice(), "{name}");

        let mut all: Vec<&String> = Vec::new();
        all.extend(report.e2.real.iter().flatten());
        all.extend(report.e2.complex.iter().flatten());
        all.extend(report.ko.iter().flatten().flatten());
        all.extend(report.ku.iter().flatten());
        all.extend(report.mu.iter().flatten());
        for d in &report.diagonals {
            all.extend(d.factors.iter().map(|f| &f.group));
            if let Status::Extension { candidates } = &d.status {
                all.extend(candidates);
            }
        }
        for g in all {
            assert_eq!(&groups::render(&groups::parse(g).unwrap()), g);
        }
    }
}

#[test]
fn intermediate_output_has_smith_forms() {
    let out = compute("three_vertex_n3.json", &["--format", "json", "--emit-intermediate"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let snf = v["intermediate"]["snf"].as_array().unwrap();
    assert_eq!(snf.len(), 2);
    assert_eq!(snf[0]["diagonal"], serde_json::json!([1, 1, 6]));
    let complexes = v["intermediate"]["complexes"].as_array().unwrap();
    assert_eq!(complexes.len(), 10);
    assert!(v.get("lifts").is_none());
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "json"] {
        let a = compute("three_vertex_n2.json", &["--format", format, "--emit-lifts"]);
        let b = compute("three_vertex_n2.json", &["--format", format, "--emit-lifts"]);
        assert_eq!(a.stdout, b.stdout);
    }
}
