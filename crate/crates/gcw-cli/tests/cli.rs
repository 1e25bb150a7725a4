//! End-to-end runs of the `gcw` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn gcw_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcw")).args(args).current_dir(dir).output().expect("gcw runs")
}

fn gcw(args: &[&str]) -> Output {
    gcw_in(&data_dir(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = gcw(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("JSON report")
}

#[test]
fn analyze_golay23() {
    let r = json(&["analyze", "--code", "catalog:golay23", "--graph", "hamming:n=23,q=2"]);
    assert_eq!(r["schema"], "gcw-report/1");
    assert_eq!(r["result"]["min_distance"], 7);
    assert_eq!(r["result"]["covering_radius"], 3);
    assert_eq!(r["result"]["size"], 4096);
}

#[test]
fn analyze_empty_file_is_a_trivial_code() {
    let o = gcw(&["analyze", "--code", "file:empty.txt", "--graph", "hamming:n=3,q=2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("trivial code"), "{}", stderr(&o));
    let o = gcw(&["analyze", "--code", "file:empty.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_hadamard12_reports_computed_and_quoted_radius() {
    let r = json(&["analyze", "--code", "catalog:hadamard12"]);
    let res = &r["result"];
    assert_eq!((res["size"].as_u64(), res["min_distance"].as_u64()), (Some(24), Some(6)));
    assert_eq!(res["covering_radius"], 4);
    assert_eq!(res["quoted_covering_radius"], 3);
}

#[test]
fn symmetry_golay23_is_two_neighbour_transitive() {
    let r = json(&["symmetry", "--code", "catalog:golay23", "--group", "builtin:golay23_aut", "--s", "2"]);
    assert_eq!(r["result"]["s_nt"], true);
    assert_eq!(r["input"]["group_order"], 41_783_132_160u64);
}

#[test]
fn classify_repetition_code() {
    let r = json(&["classify", "--code", "construction:rep:n=8,q=2", "--group", "builtin:rep_full"]);
    assert_eq!(r["result"]["tag"], "alphabet_affine");
}

#[test]
fn elusive_pair_emits_a_witness() {
    let r = json(&["elusive", "--code", "file:ex_elus.txt", "--ambient", "hamming:n=4,q=2"]);
    assert_eq!(r["result"]["verdict"], "elusive");
    assert_eq!(r["result"]["spherical_bitrade"], true);
    assert!(!r["result"]["image"].as_array().unwrap().is_empty());
}

#[test]
fn verify_paper_golay_runs_four_checks() {
    let o = gcw(&["verify-paper", "--only", "golay"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("4/4 checks passed"));
}

#[test]
fn verify_paper_twisted_matches_three_pairs() {
    let o = gcw(&["verify-paper", "--only", "twisted"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for pair in ["8/4", "8/6", "12/8"] {
        assert!(out.contains(&format!("computed δ_tw/δ_rep = {pair}")), "{out}");
    }
    assert!(out.contains("3/3 checks passed"));
}

#[test]
fn verify_paper_without_matches_warns() {
    let o = gcw(&["verify-paper", "--only", "nothing-matches"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    assert!(stdout(&o).contains("0/0 checks passed"));
}

#[test]
fn verify_paper_failure_exits_one() {
    let o = gcw(&["verify-paper", "--only", "hadamard12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL [10] hadamard12-parameters"));
}

#[test]
fn group_not_preserving_the_code_exits_three_with_witness() {
    let o = gcw(&["symmetry", "--code", "construction:cycle:n=4", "--group", "builtin:ambient"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("maps codeword 0 outside the code"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["analyze", "--code", "golay23"], &["analyze", "--code", "catalog:golay23", "--graph", "hamming:n=8,q=2"]] {
        assert_eq!(gcw(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn quotient_of_h82_by_reed_muller_translations() {
    let r = json(&[
        "quotient", "--graph", "hamming:n=8,q=2", "--group", "builtin:rm13_affine", "--normal", "builtin:rm13_translations", "--s", "2",
    ]);
    assert_eq!(r["result"]["blocks"], 16);
    assert_eq!(r["result"]["quotient"]["holds"], true);
}

#[test]
fn construct_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("gcw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("rm.txt");
    let o = gcw(&["construct", "--code", "construction:grm:q=2,k=1,t=3", "-o", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let source = format!("file:{}", file.display());
    let from_file = json(&["analyze", "--code", &source]);
    let direct = json(&["analyze", "--code", "construction:grm:q=2,k=1,t=3"]);
    assert_eq!(from_file["input"]["code_sha256"], direct["input"]["code_sha256"]);
    assert_eq!(from_file["result"], direct["result"]);
    std::fs::remove_dir_all(dir).unwrap();
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let args = ["analyze", "--code", "catalog:golay11"];
    let one = without_timing(json(&[&["--threads", "1"][..], &args].concat()));
    let four = without_timing(json(&[&["--threads", "4"][..], &args].concat()));
    assert_eq!(one.to_string(), four.to_string());
    let again = without_timing(json(&[&["--threads", "4"][..], &args].concat()));
    assert_eq!(four.to_string(), again.to_string());
}

#[test]
fn report_file_is_written() {
    let path = std::env::temp_dir().join(format!("gcw-report-{}.json", std::process::id()));
    let o = gcw(&["--report", path.to_str().unwrap(), "analyze", "--code", "catalog:golay11"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["result"]["covering_radius"], 2);
    std::fs::remove_file(path).unwrap();
}

/// Runs every `$ gcw ...` line of the README's console blocks from the
/// workspace root. The lines after a command must appear in its output; a
/// line `[exit N]` sets the expected status (default 0).
#[test]
fn readme_examples_run() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let readme = std::fs::read_to_string(root.join("README.md")).expect("README.md");
    let mut in_block = false;
    let mut examples: Vec<(String, Vec<String>, i32)> = Vec::new();
    for line in readme.lines() {
        if line.starts_with("```") {
            in_block = line.trim() == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ gcw ") {
            examples.push((cmd.to_string(), Vec::new(), 0));
        } else if let Some(last) = examples.last_mut() {
            match line.trim().strip_prefix("[exit ").and_then(|s| s.strip_suffix(']')) {
                Some(code) => last.2 = code.parse().unwrap(),
                None if !line.trim().is_empty() && line.trim() != "..." => last.1.push(line.trim().to_string()),
                None => {}
            }
        }
    }
    assert!(examples.len() >= 5, "README has too few examples");
    for (cmd, expected, code) in &examples {
        let args: Vec<&str> = cmd.split_whitespace().collect();
        let o = gcw_in(&root, &args);
        let all = stdout(&o) + &stderr(&o);
        assert_eq!(o.status.code(), Some(*code), "gcw {cmd}\n{all}");
        for line in expected {
            assert!(all.contains(line.as_str()), "gcw {cmd}: missing {line:?} in\n{all}");
        }
    }
}
