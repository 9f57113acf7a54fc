use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monosep")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const FANO: &str = "7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";

#[test]
fn separate_reports_verified_witness() {
    let g = file(P4);
    let out = run(&[
        "separate",
        "--graph",
        g.path().to_str().unwrap(),
        "--a",
        "0",
        "--b",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["separable"], true);
    let h: Vec<u64> = v["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert!(h.contains(&0) && !h.contains(&3));
    // a prefix of the path 0-1-2-3, so both sides are convex
    assert!(h.iter().enumerate().all(|(i, &x)| x == i as u64));
    assert_eq!(v["trace"]["components"][0]["path"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn separate_not_separable_is_a_completed_decision() {
    let g = file(C5);
    let out = run(&[
        "separate",
        "--graph",
        g.path().to_str().unwrap(),
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["separable"], false);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn empty_set_is_an_input_error() {
    let g = file(P4);
    let out = run(&["separate", "--graph", g.path().to_str().unwrap(), "--a", "", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("set A must be non-empty"));
}

#[test]
fn bad_inputs_exit_2() {
    let g = file("3 1\n0 0\n");
    let out = run(&[
        "separate",
        "--graph",
        g.path().to_str().unwrap(),
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let g = file(P4);
    let out = run(&[
        "separate",
        "--graph",
        g.path().to_str().unwrap(),
        "--a",
        "0",
        "--b",
        "x",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["hull", "--graph", "/nonexistent/graph", "--set", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_export_colors_sides() {
    let g = file(P4);
    let out = run(&[
        "separate",
        "--graph",
        g.path().to_str().unwrap(),
        "--a",
        "0",
        "--b",
        "3",
        "--format",
        "dot",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph separation {"));
    assert!(text.contains("0 [fillcolor=palegreen, shape=doublecircle];"));
    assert!(text.contains("3 [fillcolor=lightblue, shape=doublecircle];"));
    assert!(text.contains("2 -- 3;"));
}

#[test]
fn hulls() {
    for (graph, set, expect) in [
        (P4, "0,3", serde_json::json!([0, 1, 2, 3])),
        (C5, "0,2", serde_json::json!([0, 1, 2, 3, 4])),
        (K4, "1,3", serde_json::json!([1, 3])),
    ] {
        let g = file(graph);
        let out = run(&["hull", "--graph", g.path().to_str().unwrap(), "--set", set]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["hull"], expect);
    }
}

#[test]
fn convex_check() {
    let g = file(P4);
    let path = g.path().to_str().unwrap();
    assert_eq!(
        json(&run(&["convex-check", "--graph", path, "--set", "0,1"]))["convex"],
        true
    );
    assert_eq!(
        json(&run(&["convex-check", "--graph", path, "--set", "0,2"]))["convex"],
        false
    );
}

#[test]
fn two_partitions() {
    let g = file("2 1\n0 1\n");
    let out = run(&["two-partition", "--graph", g.path().to_str().unwrap()]);
    assert_eq!(json(&out), serde_json::json!([[0], [1]]));
    let g = file(C5);
    let out = run(&[
        "two-partition",
        "--graph",
        g.path().to_str().unwrap(),
        "--format",
        "plain",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "none\n");
    let g = file(P4);
    let out = run(&["two-partition", "--graph", g.path().to_str().unwrap()]);
    let parts = json(&out);
    assert_eq!(parts.as_array().unwrap().len(), 2);
}

#[test]
fn fuzz_is_deterministic_and_agrees() {
    let args = ["fuzz", "--seed", "42", "--count", "10", "--n-range", "4..8"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert!(text.starts_with("10/10 agree\n"), "{text}");
    assert_eq!(run(&args).stdout, first.stdout);
}

#[test]
fn fuzz_config_errors_exit_2() {
    let out = run(&["fuzz", "--n-range", "4..30"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle cap"));
    assert_eq!(run(&["fuzz", "--n-range", "4-8"]).status.code(), Some(2));
}

#[test]
fn hypergraph_reduction() {
    let h = file("3 1\n0 1 2\n");
    let out = run(&["hypergraph", "--hypergraph", h.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        (v["colorable"].clone(), v["separable"].clone()),
        (Value::Bool(true), Value::Bool(true))
    );
    assert_eq!(v["caratheodory"], 3);

    let h = file(FANO);
    let out = run(&["hypergraph", "--graph", h.path().to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(
        (v["colorable"].clone(), v["separable"].clone()),
        (Value::Bool(false), Value::Bool(false))
    );

    let h = file("3 1\n0 1\n");
    assert_eq!(
        run(&["hypergraph", "--hypergraph", h.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
