//! End-to-end checks of the binary: exit codes, JSON shapes, and the
//! documented subcommand surface.

use std::io::Write;
use std::process::{Command, Output};

fn sgwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgwb")).args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn construct_builds_a_brandt_semigroup() {
    let out = sgwb(&["construct", "B(Z2,2)"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["order"], 9);
    assert_eq!(json["zero"], 8);
}

#[test]
fn construct_rejects_syntax_errors_with_exit_two() {
    let out = sgwb(&["construct", "DP(Z3,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:7"));
}

#[test]
fn construct_rejects_unknown_constructors() {
    let out = sgwb(&["construct", "QQ(Z2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown constructor"));
}

#[test]
fn closure_accepts_inline_pairs() {
    let out = sgwb(&["closure", "Z4", "[[0,2]]"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["classes"], serde_json::json!([[0, 2], [1, 3]]));
}

#[test]
fn lattice_counts_and_dot_export() {
    let out = sgwb(&["lattice", "Z6"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["count"], 4);
    let dot = sgwb(&["lattice", "Z6", "--dot"]);
    let text = String::from_utf8_lossy(&dot.stdout);
    assert!(text.contains("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn green_reports_brandt_h_classes() {
    let out = sgwb(&["green", "B(Z2,2)"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["h_classes"].as_array().unwrap().len(), 5);
}

#[test]
fn schutz_of_a_nongroup_h_class() {
    // Element 1 encodes (1,0,2) in B(Z2,2); its H-class is not a group.
    let out = sgwb(&["schutz", "B(Z2,2)", "1"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["order"], 2);
}

#[test]
fn validate_echoes_canonical_form_and_flags_bad_tables() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, r#"{"order":2,"mul":[[0,1],[1,0]]}"#).unwrap();
    let out = sgwb(&["validate", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["identity"], 0);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"order":2,"mul":[[0,0],[1,0]]}"#).unwrap();
    let out = sgwb(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not associative"));

    let missing = dir.path().join("missing.json");
    let out = sgwb(&["validate", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transfer_runs_a_quotient_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let context = dir.path().join("context.json");
    let mut file = std::fs::File::create(&context).unwrap();
    write!(
        file,
        r#"{{
            "semigroups": {{
                "S": {{"order": 4, "mul": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}},
                "T": {{"order": 2, "mul": [[0,1],[1,0]]}}
            }},
            "maps": {{"theta": [0,1,0,1]}},
            "pairs": {{"rho": []}}
        }}"#
    )
    .unwrap();
    let out = sgwb(&["transfer", "quotient", context.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    assert_eq!(json["verified"], true);
    assert_eq!(json["kind"], "quotient");
}

#[test]
fn transfer_unknown_kind_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let context = dir.path().join("context.json");
    std::fs::write(&context, "{}").unwrap();
    let out = sgwb(&["transfer", "nope", context.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fp_ball_and_classify() {
    let out = sgwb(&["fp", "FlipIdem", "ball", "--bound", "2"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["count"], 5);
    assert_eq!(json["words"][0], "1");

    let out = sgwb(&["fp", "IdempotentPair", "classify", "efef"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["class"], "u1^2");
}

#[test]
fn fp_bounded_closure_with_query() {
    let out = sgwb(&[
        "fp",
        "FlipIdem",
        "closure",
        r#"[["abab","aba"]]"#,
        "ababab,ab",
        "--bound",
        "8",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    assert_eq!(json["queries"][0]["verdict"]["status"], "proven");
}

#[test]
fn fp_incomparable_ideals_over_a_free_product() {
    let out = sgwb(&[
        "fp",
        "SFP(Z2,RZ2)",
        "incomparable",
        "sfp",
        "--m",
        "3",
        "--bound",
        "16",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["pass"], true);
}

#[test]
fn verify_paper_filter_behaviour() {
    let out = sgwb(&["verify-paper", "--filter", "right-zero-bell", "--format", "text"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS]"));

    let out = sgwb(&["verify-paper", "--filter", "matches-nothing"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("matched no checks"));
}

#[test]
fn output_goes_to_a_file_with_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = sgwb(&["construct", "Z3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["order"], 3);
}
