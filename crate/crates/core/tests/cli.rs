//! End-to-end checks of the command-line interface: output shapes,
//! determinism, exit codes, and format round-trips.

use std::io::Write as _;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circforce"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn zf_reports_value_and_witness() {
    let out = run(&["zf", "C9(1,3)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("Z = 5\n"), "got: {text}");
    assert!(text.contains("witness = {"));
}

#[test]
fn rank_of_named_witnesses() {
    let out = run(&["rank", "--witness", "c9"]);
    assert_eq!(stdout(&out), "rank = 4, nullity = 5\n");
    let out = run(&["rank", "--witness", "k4:3"]);
    assert_eq!(stdout(&out), "rank = 6, nullity = 6\n");
    let out = run(&["rank", "--witness", "hankel:4"]);
    assert_eq!(stdout(&out), "rank = 4, nullity = 0\n");
}

#[test]
fn rank_of_matrix_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1/2 1").unwrap();
    writeln!(file, "1 2").unwrap();
    let out = run(&["rank", file.path().to_str().unwrap()]);
    assert_eq!(stdout(&out), "rank = 1, nullity = 1\n");
}

#[test]
fn gen_edge_list_round_trips() {
    let out = run(&["gen", "C12(1,6)", "--format", "edgelist"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 18); // 3-regular on 12 vertices
    let g = circforce::graph::Graph::from_edge_list(&text).unwrap();
    assert_eq!(
        g,
        circforce::circulant::CirculantSpec::parse("C12(1,6)")
            .unwrap()
            .build()
    );
    let dot = run(&["gen", "K3 torus C6", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph G {"));
}

#[test]
fn closure_reports_chronology_and_fixed_point() {
    let out = run(&["closure", "C5(1)", "--filled", "0,1"]);
    let text = stdout(&out);
    assert!(text.contains("final = {0, 1, 2, 3, 4}"));
    assert!(text.contains("forcing = true"));
    let stall = run(&["closure", "C5(1)", "--filled", "0,2"]);
    assert!(stdout(&stall).contains("forcing = false"));
}

#[test]
fn verify_and_predict_are_deterministic() {
    let a = run(&["verify", "C12(1,4)"]);
    let b = run(&["verify", "C12(1,4)"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "stdout must be byte-identical");
    let p1 = run(&["predict", "C14(3,5,7)"]);
    let p2 = run(&["predict", "C14(3,5,7)"]);
    assert_eq!(p1.stdout, p2.stdout);
    assert!(stdout(&p1).contains("bipartite-high-run"));
}

#[test]
fn sweep_small_exits_clean() {
    let out = run(&["sweep", "--max-n", "8", "--table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0 contradictions") || !text.contains("CONTRADICTED"));
}

#[test]
fn exit_codes() {
    // malformed spec: 2
    let out = run(&["zf", "C12(1,"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("line 1"), "parse errors carry positions: {msg}");
    // search ceiling: 3
    let out = run(&["zf", "C30(1,2)"]);
    assert_eq!(out.status.code(), Some(3));
    // fine after raising the ceiling
    let out = run(&["zf", "C30(1,2)", "--ceiling", "30"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("Z = 4\n"));
    // unknown verbs are clap's job
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witness_subcommand_builds_and_verifies() {
    let out = run(&["witness", "cycle-columns:3:3"]);
    let text = stdout(&out);
    assert!(text.contains("size = 5"));
    assert!(text.contains("forcing = true"));
    let bad = run(&["witness", "cycle-columns:2:3"]);
    assert!(!bad.status.success());
}
