//! End-to-end checks of the command-line surface: exit codes, formats,
//! and the construct -> verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latereg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("latereg_test_{}_{name}", std::process::id()));
    p
}

#[test]
fn pure_prints_presentation_and_betti() {
    let out = run_cli(&["pure", "--n", "1", "--k", "2", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("degree sequence (2, 3, 5)"));
    assert!(text.contains("matrix [2, 2] <- [3, 3, 3]"));
    assert!(text.contains("2:  2  3  ."));
}

#[test]
fn pure_koszul_dual_shift() {
    let out = run_cli(&[
        "pure", "--n", "1", "--k", "1", "--d", "0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["degree_sequence"], serde_json::json!([1, 2, 3]));
    assert_eq!(json["betti"]["entries"][0]["beta"], 1);
}

#[test]
fn pure_rejects_bad_ranges() {
    let out = run_cli(&["pure", "--n", "0", "--k", "1", "--d", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn construct_emits_worked_instance_generators() {
    let out = run_cli(&["construct", "--n", "1", "--N", "2", "--k", "1", "--d", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let mut lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    lines.sort();
    assert_eq!(lines, vec!["x0*y1", "x1*y1", "y1*y2", "y1^2", "y2^2"]);
}

#[test]
fn construct_rejects_inadmissible_instance_with_exit_two() {
    let out = run_cli(&["construct", "--n", "2", "--N", "2", "--k", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(d)"));
}

#[test]
fn construct_accepts_module_file() {
    let path = tmp("module.txt");
    std::fs::write(
        &path,
        "matrix [2, 2] <- [3, 3, 3]\n0: x1\n0: -x0, 1: x1\n1: -x0\n",
    )
    .unwrap();
    let out = run_cli(&[
        "construct",
        "--module",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--N",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 13); // 10 cubic monomials + 3 lifts
    assert!(text.contains("y3^3"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn cas_export_is_pasteable() {
    let out = run_cli(&[
        "construct",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "1",
        "--d",
        "0",
        "--format",
        "cas",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("R = ZZ/32003[x0,x1,y1,y2];"));
    assert!(text.contains("JM = ideal("));
}

#[test]
fn verify_passes_and_emits_certificate_json() {
    let out = run_cli(&["verify", "--n", "1", "--N", "2", "--k", "2", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(
        json["computed"]["max_degree_sequence"],
        serde_json::json!([3, 5, 6, 7])
    );
    assert_eq!(json["computed"]["regularity"], 4);
    assert_eq!(json["params"]["prime"], 32003);
}

#[test]
fn verify_ascii_renders_tables_side_by_side() {
    let out = run_cli(&[
        "verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--format", "ascii",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("predicted Betti table"));
    assert!(text.contains("computed Betti table"));
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn corrupted_prediction_exits_one() {
    let out = run_cli(&[
        "verify",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "2",
        "--d",
        "1",
        "--expect-seq",
        "3,5,6,8",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["pass"], false);
}

#[test]
fn verify_hypothesis_failure_exits_two() {
    let out = run_cli(&["verify", "--n", "2", "--N", "2", "--k", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_output_reverifies_to_identical_certificate() {
    let gens = tmp("gens.txt");
    let out = run_cli(&[
        "construct",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "2",
        "--d",
        "1",
        "--out",
        gens.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let from_file = run_cli(&[
        "verify",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "2",
        "--d",
        "1",
        "--input",
        gens.to_str().unwrap(),
    ]);
    let rebuilt = run_cli(&["verify", "--n", "1", "--N", "2", "--k", "2", "--d", "1"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(rebuilt.status.code(), Some(0));
    let mut a: serde_json::Value = serde_json::from_str(&stdout(&from_file)).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout(&rebuilt)).unwrap();
    a["wall_ms"] = serde_json::json!(0);
    b["wall_ms"] = serde_json::json!(0);
    assert_eq!(a, b);
    std::fs::remove_file(&gens).ok();
}

#[test]
fn scan_emits_csv_with_fixed_header_and_slope_summary() {
    let out = run_cli(&[
        "scan",
        "--n",
        "1",
        "--N",
        "3",
        "--k",
        "2..3",
        "--max-seconds",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "k,d_max,reg_predicted,reg_computed,wall_ms"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "2");
    assert_eq!(row[1], "5");
    assert_eq!(row[2], "8");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("slope"));
}

#[test]
fn scan_rejects_malformed_range() {
    let out = run_cli(&["scan", "--n", "1", "--N", "3", "--k", "6..2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flag_exits_three() {
    let out = run_cli(&[
        "verify",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "1",
        "--d",
        "0",
        "--frobnicate",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn composite_characteristic_exits_three() {
    let out = run_cli(&[
        "verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--prime", "32004",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn garbage_generator_file_is_a_clean_error() {
    let path = tmp("garbage.txt");
    std::fs::write(&path, "y1^2\nz9*x0 + y2\n").unwrap();
    let out = run_cli(&[
        "verify",
        "--n",
        "1",
        "--N",
        "2",
        "--k",
        "1",
        "--d",
        "0",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    std::fs::remove_file(&path).ok();
}
