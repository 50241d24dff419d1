//! End-to-end tests of the installed binary: spawn it, feed it files, and
//! freeze the exact stdout bytes, stderr routing, and exit codes.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn hyperquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is UTF-8")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn extension_subcommands_freeze_their_bytes() {
    let out = hyperquad(&["extend-triple", "1", "3", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"roots\":[\"120\",\"0\"]}\n");

    let out = hyperquad(&["extend-quadruple", "1", "3", "8", "120"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"roots\":[\"777480/8288641\",\"0\"]}\n");
}

#[test]
fn identical_argv_means_identical_stdout() {
    let first = hyperquad(&["search", "--arity", "3", "--bound", "40"]);
    let second = hyperquad(&["search", "--arity", "3", "--bound", "40"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn diagnostics_go_to_stderr_only() {
    let out = hyperquad(&["verify-identities", "--suite", "quadruple"]);
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(stderr.contains("IDENTITY"));
    assert!(!stdout_of(&out).contains("IDENTITY "));
    serde_json::from_str::<serde_json::Value>(stdout_of(&out)).expect("stdout is one JSON doc");
}

#[test]
fn check_distinguishes_pass_from_mathematical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_file(
        dir.path(),
        "good.json",
        r#"{"elements": ["1", "3", "8", "120"]}"#,
    );
    let out = hyperquad(&["check", &good]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(payload["regular"], serde_json::json!(true));
    assert_eq!(payload["diophantine"]["pass"], serde_json::json!(true));

    let bad = write_file(
        dir.path(),
        "bad.json",
        r#"{"elements": ["1", "3", "8", "121"]}"#,
    );
    let out = hyperquad(&["check", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let payload: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(payload["diophantine"]["pass"], serde_json::json!(false));
}

#[test]
fn usage_problems_exit_two() {
    let out = hyperquad(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hyperquad(&["extend-triple", "1", "3", "eight"]);
    assert_eq!(out.status.code(), Some(2));
    let payload: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert!(payload["error"].as_str().unwrap().contains("eight"));

    let out = hyperquad(&["check", "/nonexistent/tuple.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hyperdet_reports_determinant_and_faces() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "embedded.json",
        r#"{"a": [[["-1", "1"], ["1", "120"]], [["1", "8"], ["3", "-1"]]]}"#,
    );
    let out = hyperquad(&["hyperdet", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"faces\":{\"F12\":\"4\",\"F13\":\"9\",\"F14\":\"121\",\"F23\":\"25\",\
         \"F24\":\"361\",\"F34\":\"961\"},\"hyperdet\":\"0\"}\n"
    );
}

#[test]
fn complete_solves_for_the_missing_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "incomplete.json",
        r#"{"a": [[["0", "1"], ["1", "120"]], [["1", "8"], ["3", "-1"]]]}"#,
    );
    let out = hyperquad(&["complete", &path, "--missing", "000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"roots\":[\"-1\",\"-11781\"]}\n");

    let out = hyperquad(&["complete", &path, "--missing", "00x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rotate_transports_the_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "classical.json",
        r#"{"x": ["1", "3", "8", "120"], "y": ["1", "1", "1", "1"],
            "z": ["2", "3", "11", "5", "19", "31"]}"#,
    );
    let out = hyperquad(&["rotate", &path, "--variant", "15a", "--c", "3/5", "--s", "4/5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"x\":[\"7/5\",\"13/5\",\"28/5\",\"364/5\"],\
         \"y\":[\"-9/5\",\"-1/5\",\"-477/5\",\"-29/5\"],\
         \"z\":[\"-118/5\",\"3\",\"11\",\"5\",\"19\",\"-101/5\"]}\n"
    );

    let out = hyperquad(&["rotate", &path, "--variant", "15a", "--c", "1", "--s", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parameterize_asymmetric_reproduces_the_classical_solution() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "inputs.json",
        r#"{"y1": "1", "x2": "3", "x3": "8", "x4": "120",
            "z23": "5", "z24": "19", "z34": "31"}"#,
    );
    let out = hyperquad(&["parameterize", "--mode", "asymmetric", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"x\":[\"11781\",\"3\",\"8\",\"120\"],\"y\":[\"1\",\"1\",\"1\",\"1\"],\
         \"z\":[\"188\",\"307\",\"1189\",\"5\",\"19\",\"31\"]}\n"
    );
}

#[test]
fn parameterize_symmetric_emits_a_singular_hypermatrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "sym.json",
        r#"{"p": ["1", "2"], "q": ["3", "1"], "r": ["1", "1"],
            "b0": "1", "g": "2", "h1": "1", "h2": "3", "h3": "1"}"#,
    );
    let out = hyperquad(&["parameterize", "--mode", "symmetric", &path]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert!(payload["hypermatrix"]["a"].is_array());
    assert_eq!(payload["witnesses"].as_array().unwrap().len(), 6);
    assert!(payload["kernel"]["p"].is_array());
}

#[test]
fn search_writes_csv_next_to_the_json_list() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("pairs.csv");
    let out = hyperquad(&[
        "search",
        "--arity",
        "2",
        "--bound",
        "5",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "[{\"elements\":[\"1\",\"3\"]},{\"elements\":[\"2\",\"4\"]},\
         {\"elements\":[\"3\",\"5\"]}]\n"
    );
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv, "e1,e2,z12,regular\n1,3,2,\n2,4,3,\n3,5,4,\n");
}

#[test]
fn sharded_searches_merge_to_the_full_survey() {
    let full = hyperquad(&["search", "--arity", "2", "--bound", "30"]);
    let full_list: Vec<serde_json::Value> =
        serde_json::from_str(stdout_of(&full)).unwrap();
    let mut sharded = Vec::new();
    for index in 0..4 {
        let shard = format!("{index}/4");
        let out = hyperquad(&["search", "--arity", "2", "--bound", "30", "--shard", &shard]);
        assert_eq!(out.status.code(), Some(0));
        let list: Vec<serde_json::Value> = serde_json::from_str(stdout_of(&out)).unwrap();
        sharded.extend(list);
    }
    sharded.sort_by_key(|v| v["elements"].to_string());
    let mut full_sorted = full_list.clone();
    full_sorted.sort_by_key(|v| v["elements"].to_string());
    assert_eq!(sharded, full_sorted);
}

#[test]
fn reduce_matrix_emits_the_normal_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "matrix.json",
        r#"{"entries": [["2", "4", "9"], ["4", "10", "25"], ["9", "25", "65"]]}"#,
    );
    let out = hyperquad(&["reduce-matrix", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"k\":\"8\",\"m\":\"1/2\",\"scalings\":[\"1\",\"1/4\",\"1/9\"],\
         \"x\":[\"1/8\",\"7/36\"]}\n"
    );

    let singular = write_file(
        dir.path(),
        "flat.json",
        r#"{"entries": [["1", "1"], ["1", "1"]]}"#,
    );
    let out = hyperquad(&["reduce-matrix", &singular]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_lists_every_subcommand() {
    let out = hyperquad(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for subcommand in [
        "verify-identities",
        "check",
        "extend-triple",
        "extend-quadruple",
        "hyperdet",
        "complete",
        "rotate",
        "parameterize",
        "search",
        "reduce-matrix",
    ] {
        assert!(text.contains(subcommand), "help lacks {subcommand}");
    }
}
