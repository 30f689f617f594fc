//! End-to-end checks of the critcolor binary: subcommands, exit codes,
//! and output files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_critcolor"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("critcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn fixture_emits_roundtrippable_graph6() {
    let out = bin().args(["fixture", "figure1"]).output().unwrap();
    assert!(out.status.success());
    let line = stdout(&out);
    let g = critcolor::formats::from_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 9);
    assert_eq!(g.edge_count(), 19);

    let out = bin().args(["fixture", "figure1", "--emit", "edges"]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("9\n"));
}

#[test]
fn unknown_fixture_is_usage_error() {
    let out = bin().args(["fixture", "figure2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_figure1_reports_chi_5() {
    let path = tmp("fig1.g6");
    let fixture = bin().args(["fixture", "figure1"]).output().unwrap();
    std::fs::write(&path, fixture.stdout).unwrap();

    let json_path = tmp("fig1-report.json");
    let out = bin()
        .args(["analyze", "--input"])
        .arg(&path)
        .args(["--format", "graph6", "--json"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("chi=5"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json[0]["chromatic_number"], 5);
    assert_eq!(json[0]["clique_number"], 4);
    assert_eq!(json[0]["ore_degree"], 9);
}

#[test]
fn analyze_missing_file_is_io_error() {
    let out = bin()
        .args(["analyze", "--input", "/nonexistent/x.g6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exhaustive_scan_passes() {
    let out = bin()
        .args([
            "verify",
            "--statement",
            "theorem-m",
            "--exhaustive-n",
            "7",
            "--min-deg",
            "6",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations=0"));
}

#[test]
fn verify_corpus_with_sharpness_note() {
    let path = tmp("fig1-corpus.g6");
    let fixture = bin().args(["fixture", "figure1"]).output().unwrap();
    std::fs::write(&path, fixture.stdout).unwrap();
    let out = bin()
        .args(["verify", "--statement", "corollary-o", "--corpus"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sharpness"));
}

#[test]
fn verify_requires_a_source() {
    let out = bin().args(["verify", "--statement", "kk"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn walk_writes_trace_json() {
    let path = tmp("fig1-walk.g6");
    let fixture = bin().args(["fixture", "figure1"]).output().unwrap();
    std::fs::write(&path, fixture.stdout).unwrap();
    let trace_path = tmp("trace.json");
    let out = bin()
        .args(["walk", "--input"])
        .arg(&path)
        .args(["--start", "0", "--max-steps", "40", "--trace"])
        .arg(&trace_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&trace_path).unwrap()).unwrap();
    assert_eq!(trace["start"], 0);
    assert_eq!(trace["relaxed_range"], true);
    assert!(!trace["snapshots"].as_array().unwrap().is_empty());
}

#[test]
fn walk_from_high_vertex_is_usage_error() {
    let path = tmp("fig1-walk-high.g6");
    let fixture = bin().args(["fixture", "figure1"]).output().unwrap();
    std::fs::write(&path, fixture.stdout).unwrap();
    let out = bin()
        .args(["walk", "--input"])
        .arg(&path)
        .args(["--start", "3", "--max-steps", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lemma1_small_run_passes() {
    let out = bin()
        .args(["lemma1", "--samples", "10", "--max-n", "7", "--seed", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations=0"));
}
