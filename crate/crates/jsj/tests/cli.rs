use std::path::{Path, PathBuf};
use std::process::Command;

use jsj::cli::{run, Outcome};
use jsj::format::{parse_graph_file, write_graph_file};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn jsj(args: &[&str]) -> Outcome {
    run(std::iter::once("jsj").chain(args.iter().copied()))
}

#[test]
fn split_slopes_output() {
    let out = jsj(&["slopes", "2", "--split", "0"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "plus=0/1 minus=-1/2\n");
}

#[test]
fn mixed_slopes_output() {
    let out = jsj(&["slopes", "4"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.contains("normalized=-1/1 inf 4/1\n"),
        "{}",
        out.stdout
    );
}

#[test]
fn lens_expand_and_evaluate() {
    assert_eq!(jsj(&["lens", "expand", "7", "2"]).stdout, "a=[4,2]\n");
    assert_eq!(jsj(&["lens", "evaluate", "4", "2"]).stdout, "value=-7/2\n");
}

#[test]
fn consistent_two_chain() {
    let f = fixture("two_chain.txt");
    let out = jsj(&["consistent", f.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("inconsistent"));
}

#[test]
fn bundle_word_and_factor() {
    let out = jsj(&["bundle", "word", "-", "3", "2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("matrix=[[-5,-3],[2,1]]\n"));
    assert!(out.stdout.contains("virtually_overtwisted=2\n"));
    let out = jsj(&["bundle", "word", "+", "3", "2"]);
    assert!(out.stdout.contains("virtually_overtwisted=0\n"));

    let out = jsj(&["bundle", "factor", "-5", "-3", "2", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "word=-[3,2]\n");
}

#[test]
fn count_output() {
    let out = jsj(&["count", "3", "4"]);
    assert_eq!(
        out.stdout,
        "total=6 universally_tight=2 virtually_overtwisted=4\n"
    );
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(jsj(&[]).code, 2);
    assert_eq!(jsj(&["frobnicate"]).code, 2);
    assert_eq!(jsj(&["slopes", "x"]).code, 2);
    assert_eq!(jsj(&["bundle", "word", "*", "3"]).code, 2);
    assert_eq!(jsj(&["--help"]).code, 0);
    // domain
    assert_eq!(jsj(&["lens", "expand", "4", "2"]).code, 1);
    assert_eq!(jsj(&["slopes", "0"]).code, 1);
    assert_eq!(jsj(&["bundle", "word", "+", "2", "2"]).code, 1);
    assert_eq!(jsj(&["bundle", "factor", "1", "1", "0", "1"]).code, 1);
    assert_eq!(jsj(&["consistent", "/nonexistent/graph.txt"]).code, 1);
    let invalid = fixture("invalid.txt");
    let out = jsj(&["validate", invalid.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("invalid\n"));
    assert_eq!(jsj(&["reduce", invalid.to_str().unwrap()]).code, 1);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "edge 0 1 sign=+1\n").unwrap();
    let out = jsj(&["consistent", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(
        out.stderr.contains("unknown vertex 0 at line 1"),
        "{}",
        out.stderr
    );
}

#[test]
fn reduce_report_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("t.dot");
    let f = fixture("three_chain.txt");
    let out = jsj(&[
        "reduce",
        "--oracle",
        "--dot",
        dot.to_str().unwrap(),
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let expected_tail = "leaves:\n  {0,1}\n  {0,2}\n  {1,2}\noracle:\n  {0,1}\n  {0,2}\n  {1,2}\n";
    assert!(out.stdout.ends_with(expected_tail), "{}", out.stdout);
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("digraph reduction {\n"));
    assert_eq!(dot.matches(" -> ").count(), 3);
}

#[test]
fn four_chain_leaves_are_the_three_element_subsets() {
    let f = fixture("four_chain.txt");
    let out = jsj(&["reduce", f.to_str().unwrap()]);
    let leaves: Vec<&str> = out
        .stdout
        .split("leaves:\n")
        .nth(1)
        .unwrap()
        .lines()
        .collect();
    assert_eq!(leaves, ["  {0,1,2}", "  {0,1,3}", "  {0,2,3}", "  {1,2,3}"]);
}

#[test]
fn round_trip_through_the_writer() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let g = parse_graph_file(&text).unwrap();
        let written = write_graph_file(&g);
        assert_eq!(parse_graph_file(&written).unwrap(), g);
        assert_eq!(
            write_graph_file(&parse_graph_file(&written).unwrap()),
            written
        );
    }
}

#[test]
fn binary_matches_library() {
    let f = fixture("signed_cycle.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_jsj"))
        .args(["reduce", "--all-paths", f.to_str().unwrap()])
        .output()
        .unwrap();
    let lib = jsj(&["reduce", "--all-paths", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_jsj"))
        .arg("lens")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
