//! End-to-end tests of the binary: output content, JSON shapes, exit codes
//! and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn pathhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("pathhom-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn info_on_the_main_fixture() {
    let out = pathhom(&["info", "-i", "fixture:g_main"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("11 vertices, 24 arrows, multisquare-free"));
    assert!(text.contains("0 thin pairs"));
    assert!(text.contains("longest path length: 4"));
}

#[test]
fn info_counts_thin_pairs() {
    let out = pathhom(&["info", "-i", "fixture:g_prime"]);
    assert!(stdout(&out).contains("6 thin pairs"));
}

#[test]
fn info_reads_edge_list_files() {
    let path = temp_file("triangle", "# a triangle\n0 1\n1 2\n0 2\n");
    let out = pathhom(&["info", "-i", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3 vertices, 3 arrows"));
    std::fs::remove_file(path).ok();
}

#[test]
fn input_errors_exit_with_two() {
    let out = pathhom(&["info", "-i", "/nonexistent/edges.txt"]);
    assert_eq!(out.status.code(), Some(2));

    let path = temp_file("loop", "a a\n");
    let out = pathhom(&["info", "-i", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("loop arrow"));
    std::fs::remove_file(path).ok();

    let out = pathhom(&["info", "-i", "fixture:bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = pathhom(&["smoves", "-i", "fixture:cube"]);
    assert_eq!(out.status.code(), Some(2)); // missing --n

    let out = pathhom(&["homology", "-i", "fixture:cube", "--field", "F4"]);
    assert_eq!(out.status.code(), Some(2)); // 4 is not prime
}

#[test]
fn smoves_census_text() {
    let out = pathhom(&["smoves", "-i", "fixture:cube", "--n", "3"]);
    let text = stdout(&out);
    assert!(text.contains("6 nodes, 6 edges, 1 class"));
    assert!(text.contains("thick, bipartite"));

    let out = pathhom(&["smoves", "-i", "fixture:g_main", "--n", "4"]);
    let text = stdout(&out);
    assert!(text.contains("12 nodes, 15 edges, 1 class"));
    assert!(text.contains("NON-bipartite (odd cycle length 9)"));
}

#[test]
fn smoves_json_and_dot() {
    let dot_path = std::env::temp_dir().join(format!("pathhom-{}.dot", std::process::id()));
    let out = pathhom(&[
        "smoves",
        "-i",
        "fixture:cube",
        "--n",
        "3",
        "--json",
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(reports[0]["edges"].as_array().unwrap().len(), 6);
    assert_eq!(reports[0]["classes"][0]["bipartite"], true);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph smoves {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
    std::fs::remove_file(dot_path).ok();
}

#[test]
fn homology_euler_gap_on_g_main() {
    let out = pathhom(&[
        "homology",
        "-i",
        "fixture:g_main",
        "--field",
        "Q",
        "--field",
        "F2",
        "--field",
        "F3",
        "--json",
    ]);
    assert!(out.status.success());
    let summaries: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let euler = |i: usize| summaries[i]["euler"].as_i64().unwrap();
    assert_eq!(summaries[0]["field"], "Q");
    assert_eq!(euler(1), euler(0) + 1);
    assert_eq!(euler(2), euler(0));
    assert_eq!(summaries[0]["method_agreement"], true);
}

#[test]
fn homology_text_marks_unbounded_complexes() {
    let path = temp_file("two-cycle", "a b\nb a\n");
    let out = pathhom(&["homology", "-i", path.to_str().unwrap(), "--field", "Q"]);
    assert!(stdout(&out).contains("undefined"));
    std::fs::remove_file(path).ok();
}

#[test]
fn cochain_torsion_on_g_main() {
    let out = pathhom(&["cochain", "-i", "fixture:g_main"]);
    let text = stdout(&out);
    assert!(text.contains("level 4: Z-structure: Z/2Z (torsion!)"));
    assert!(text.contains("level 3: Z-structure: Z^7, torsion-free"));

    let out = pathhom(&["cochain", "-i", "fixture:g_main", "--json"]);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let level4 = reports
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["level"] == 4)
        .unwrap();
    assert_eq!(level4["free_rank"], 0);
    assert_eq!(level4["torsion"][0], "2");
    assert_eq!(level4["methods_agree"], true);

    let out = pathhom(&["cochain", "-i", "fixture:cube", "--n", "3", "--n-max", "3"]);
    assert!(stdout(&out).contains("Z^1"));
}

#[test]
fn basis_renders_vectors() {
    let out = pathhom(&["basis", "-i", "fixture:cube", "--n", "3"]);
    let text = stdout(&out);
    assert!(text.contains("dimension 1"));
    assert!(text.contains("(0 1 4 7)"));
}

#[test]
fn basis_falls_back_to_the_kernel_method_on_multisquares() {
    let path = temp_file("multisquare", "0 a\n0 b\n0 c\na 1\nb 1\nc 1\n");
    let out = pathhom(&["basis", "-i", path.to_str().unwrap(), "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("General"));
    assert!(text.contains("dimension 2"));
    std::fs::remove_file(path).ok();
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["homology", "-i", "fixture:g_main", "--json"],
        vec![
            "smoves",
            "-i",
            "fixture:trapezohedron",
            "--n",
            "3",
            "--json",
        ],
        vec!["verify-paper", "--corpus-size", "5"],
    ] {
        let a = pathhom(&args);
        let b = pathhom(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}

#[test]
fn verify_paper_passes_and_exits_zero() {
    let out = pathhom(&["verify-paper", "--corpus-size", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 9);
    assert!(text.contains("all 9 checks passed"));
}
