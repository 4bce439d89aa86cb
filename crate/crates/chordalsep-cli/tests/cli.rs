//! End-to-end tests of the chordalsep binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const HAJOS_G6: &str = "E}h_";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chordalsep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin written");
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn classify_hajos_reports_helly_non_membership_with_six_vertex_witness() {
    let output = run(&["classify", "--output", "json"], HAJOS_G6);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    assert_eq!(value["graph6"], serde_json::json!(HAJOS_G6));
    assert_eq!(value["chordal"], serde_json::json!(true));
    assert_eq!(value["classes"]["helly"]["member"], serde_json::json!(false));
    let witness = &value["classes"]["helly"]["witness"];
    assert_eq!(witness["pattern"], serde_json::json!("hajos"));
    assert_eq!(witness["vertices"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    // Class v (dart-free) holds for the 3-sun.
    assert_eq!(value["classes"]["v"]["member"], serde_json::json!(true));
}

#[test]
fn separators_on_k4_prints_empty_multiset() {
    let output = run(&["separators"], "C~");
    assert!(output.status.success());
    assert!(stdout(&output).contains("(empty)"));
}

#[test]
fn separators_matrix_shows_overlap_tags_for_hajos() {
    let output = run(&["separators", "--output", "json"], HAJOS_G6);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    assert_eq!(
        value["separators"],
        serde_json::json!([[0, 1], [0, 2], [1, 2]])
    );
    assert_eq!(value["relations"][0][1], serde_json::json!("O"));
    assert_eq!(value["relations"][1][1], serde_json::json!("."));
}

#[test]
fn cliquetree_emits_dot_with_separator_labels() {
    let output = run(&["cliquetree"], "Ch");
    assert!(output.status.success());
    let dot = stdout(&output);
    assert!(dot.starts_with("graph cliquetree {"));
    assert!(dot.contains("label=\"{1}\""));
    assert!(dot.contains("--"));
}

#[test]
fn helly_flags_the_hajos_family() {
    let output = run(&["helly", "--output", "json"], HAJOS_G6);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    assert_eq!(value["holds"], serde_json::json!(false));
    assert_eq!(value["witness_indices"], serde_json::json!([0, 1, 2]));
    assert_eq!(
        value["witness_sets"],
        serde_json::json!([[0, 1], [0, 2], [1, 2]])
    );
}

#[test]
fn patterns_accepts_edge_lists_and_reports_occurrences() {
    let edge_list = "# three-sun\n0 1\n0 2\n1 2\n0 3\n1 3\n0 4\n2 4\n1 5\n2 5\n";
    let output = run(&["patterns"], edge_list);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("three-sun"));
    assert!(text.contains("hajos"));
    assert!(text.contains("present"));
    assert!(text.contains("claw      absent"));
}

#[test]
fn verify_small_corpus_passes_with_exit_zero() {
    let output = run(&["verify", "--max-n", "5"], "");
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    let text = stdout(&output);
    assert!(text.contains("thm6.ii"));
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_json_is_deterministic() {
    let a = run(&["verify", "--max-n", "4", "--output", "json"], "");
    let b = run(&["verify", "--max-n", "4", "--output", "json"], "");
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rows: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(rows.as_array().unwrap().len() >= 15);
}

#[test]
fn enumerate_streams_graph6_with_filters() {
    let output = run(&["enumerate", "--max-n", "4", "--filter", "connected-chordal"], "");
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    // 1 + 1 + 2 + 5 connected chordal graphs on 1..=4 vertices.
    assert_eq!(lines.len(), 9);
    assert!(lines.contains(&"C~"));
}

#[test]
fn malformed_graph6_exits_two_with_diagnostic() {
    let output = run(&["classify"], "C");
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("truncated"), "stderr: {err}");
}

#[test]
fn non_chordal_input_to_chordal_commands_exits_two() {
    for command in ["classify", "separators", "cliquetree", "helly"] {
        let output = run(&[command], "Cl");
        assert_eq!(output.status.code(), Some(2), "command {command}");
        let err = String::from_utf8_lossy(&output.stderr);
        assert!(err.contains("not chordal"), "command {command}: {err}");
    }
}

#[test]
fn oversized_enumeration_exits_two() {
    let output = run(&["enumerate", "--max-n", "9"], "");
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("graph6"));
}

#[test]
fn text_and_json_classify_agree_on_verdicts() {
    let text_out = run(&["classify"], "Dh{");
    let json_out = run(&["classify", "--output", "json"], "Dh{");
    assert!(text_out.status.success() && json_out.status.success());
    let text = stdout(&text_out);
    let value: serde_json::Value = serde_json::from_str(stdout(&json_out).trim()).unwrap();
    for id in ["i", "ii", "iii", "iv", "v", "vi", "helly"] {
        let member = value["classes"][id]["member"].as_bool().unwrap();
        let marker = format!("  {id:<5} {}", if member { "member" } else { "non-member" });
        assert!(text.contains(&marker), "missing {marker:?} in {text}");
    }
}

#[test]
fn dot_output_rejected_outside_cliquetree() {
    let output = run(&["classify", "--output", "dot"], "C~");
    assert_eq!(output.status.code(), Some(2));
}
