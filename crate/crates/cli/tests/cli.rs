//! End-to-end runs of the binary against the checked-in fixtures, pinning
//! output shapes and the 0/1/2 exit-code contract.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    path.to_str().unwrap().to_string()
}

fn bdsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn bdsym_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdsym"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    file
}

#[test]
fn show_prints_canonical_table() {
    let out = bdsym(&["show", &fixture("exa2.fn")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n=2"));
    assert!(text.contains("00 -> 01"));
    assert!(text.contains("# fixed points: 01"));
}

#[test]
fn classify_reports_coordinate_symmetry() {
    let out = bdsym(&["classify", &fixture("exa17.fn")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("coordinate_symmetric: true"));
}

#[test]
fn classify_json_has_flags_and_witnesses() {
    let out = bdsym(&["classify", &fixture("table3.fn"), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["flags"]["translation_symmetric"], true);
    assert!(value["witnesses"]["translation"].is_object());
    assert!(value["order"].is_number());
}

#[test]
fn check_pair_passes_and_fails_with_exit_codes() {
    let ok = bdsym(&[
        "check-pair",
        "--anti",
        &fixture("exa11.fn"),
        &fixture("exa11.fn"),
        &fixture("id2.bij"),
        &fixture("id2.bij"),
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("anti-iso: true"));

    let bad = bdsym(&[
        "check-pair",
        &fixture("exa2.fn"),
        &fixture("exa16.fn"),
        &fixture("id2.bij"),
        &fixture("id2.bij"),
    ]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("iso: false"));
}

#[test]
fn check_pair_reads_pair_files() {
    let out = bdsym(&[
        "check-pair",
        &fixture("exa6_phi.fn"),
        &fixture("exa6_psi.fn"),
        "--pair",
        &fixture("exa6.pair"),
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn iso_enumeration_empty_exits_one() {
    // a constant field cannot be conjugate to a bijective one
    let out = bdsym(&["iso", &fixture("exa2.fn"), &fixture("exa6_phi.fn")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("found 0 pair(s)"));
}

#[test]
fn iso_json_lines_are_pairs() {
    let out = bdsym(&[
        "iso",
        &fixture("exa2.fn"),
        &fixture("exa16.fn"),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["kind"], "iso");
        assert_eq!(v["g"].as_array().unwrap().len(), 4);
        assert_eq!(v["gp"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn aut_count_flag() {
    let out = bdsym(&["aut", &fixture("exa17.fn"), "--count"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "96");
}

#[test]
fn anti_aut_of_constant_is_empty() {
    let out = bdsym(&["anti-aut", &fixture("exa2.fn")]);
    assert_eq!(code(&out), 1);
}

#[test]
fn search_limit_truncates() {
    let out = bdsym(&["aut", &fixture("exa15_a.fn"), "--limit", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("found 3 pair(s)"));
    assert!(stderr(&out).contains("truncated"));
}

#[test]
fn portrait_dot_is_deterministic() {
    let a = bdsym(&["portrait", &fixture("exa11.fn")]);
    let b = bdsym(&["portrait", &fixture("exa11.fn")]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.starts_with("digraph portrait {"));
    assert!(text.contains("\"00\" [label=\"0*0*\\nexc=11\"];"));
    assert!(text.contains("\"00\" -> \"11\";"));
}

#[test]
fn portrait_json_shape() {
    let out = bdsym(&["portrait", &fixture("exa2.fn"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["nodes"][0]["state"], "00");
    assert!(v["edges"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(["00", "01"])));
}

#[test]
fn portrait_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("graph.dot");
    let out = bdsym(&[
        "portrait",
        &fixture("exa11.fn"),
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let written = std::fs::read_to_string(&dest).unwrap();
    assert!(written.starts_with("digraph portrait {"));
}

#[test]
fn discrete_orbit_output() {
    let sched = temp_file("n=2\n10\n01\n");
    let out = bdsym(&[
        "orbit",
        &fixture("exa2.fn"),
        sched.path().to_str().unwrap(),
        "10",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("k=-1: 10"));
    assert!(text.contains("k=0: 00"));
    assert!(text.contains("k=1: 01"));
}

#[test]
fn timed_orbit_emits_signal_json() {
    let sched = temp_file("n=2\n0.0 10\n1.5 01\n");
    let out = bdsym(&[
        "orbit",
        &fixture("exa2.fn"),
        sched.path().to_str().unwrap(),
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["initial"], "10");
    assert_eq!(v["breakpoints"][0], serde_json::json!([0.0, "00"]));
    assert_eq!(v["breakpoints"][1], serde_json::json!([1.5, "01"]));
}

#[test]
fn anti_orbit_branches_and_empty_case() {
    let sched = temp_file("n=2\n11\n");
    let ok = bdsym(&[
        "anti-orbit",
        &fixture("exa11.fn"),
        sched.path().to_str().unwrap(),
        "00",
    ]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout(&ok).trim(), "00 11");

    let empty = bdsym(&[
        "anti-orbit",
        &fixture("exa2.fn"),
        sched.path().to_str().unwrap(),
        "11",
    ]);
    assert_eq!(code(&empty), 1);
    assert!(stderr(&empty).contains("no branches"));
}

#[test]
fn group_closure_from_pair_file() {
    let out = bdsym(&["group", &fixture("exa17.fn"), &fixture("exa17.pair")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order 3"));
    assert!(text.contains("symmetry group of order 3"));
}

#[test]
fn group_rejects_non_automorphism_generators() {
    // the order-4 state map with the identity relabeling does not commute
    // with the constant field's masked updates
    let pair = temp_file(
        "g:\nn=2\n00 -> 01\n01 -> 11\n10 -> 00\n11 -> 10\ng':\nn=2\n00 -> 00\n01 -> 01\n10 -> 10\n11 -> 11\n",
    );
    let out = bdsym(&["group", &fixture("exa2.fn"), pair.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("not an automorphism"));
}

#[test]
fn verify_iso_statements_pass() {
    let out = bdsym(&[
        "verify",
        "--thm29",
        &fixture("exa6_phi.fn"),
        &fixture("exa6_psi.fn"),
        "--pair",
        &fixture("exa6.pair"),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("a (pointwise diagrams): PASS"));
    assert!(text.contains("verdicts agree: yes"));
}

#[test]
fn verify_anti_statements_pass_and_json_works() {
    let out = bdsym(&[
        "verify",
        "--thm28",
        &fixture("exa11.fn"),
        &fixture("exa11.fn"),
        &fixture("id2.bij"),
        &fixture("id2.bij"),
        "--format",
        "json",
        "--horizon",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["statements"]["b"]["pass"], true);
}

#[test]
fn verify_failing_pair_exits_one() {
    let out = bdsym(&[
        "verify",
        "--thm28",
        &fixture("exa2.fn"),
        &fixture("exa16.fn"),
        &fixture("id2.bij"),
        &fixture("id2.bij"),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_needs_exactly_one_mode_flag() {
    let out = bdsym(&[
        "verify",
        &fixture("exa11.fn"),
        &fixture("exa11.fn"),
        &fixture("id2.bij"),
        &fixture("id2.bij"),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--thm29"));
}

#[test]
fn equal_systems_mirror_and_forward() {
    let mirror = bdsym(&[
        "equal-systems",
        "--mode",
        "anti",
        &fixture("exa16.fn"),
        &fixture("exa2.fn"),
        "--horizon",
        "2",
    ]);
    assert_eq!(code(&mirror), 0);
    assert!(stdout(&mirror).contains("equal: true"));

    let forward = bdsym(&[
        "equal-systems",
        "--mode",
        "forward",
        &fixture("exa2.fn"),
        &fixture("exa16.fn"),
        "--horizon",
        "2",
    ]);
    assert_eq!(code(&forward), 1);
    assert!(stdout(&forward).contains("equal: false"));
}

#[test]
fn input_errors_exit_two_with_location() {
    let missing = bdsym(&["show", "no_such_file.fn"]);
    assert_eq!(code(&missing), 2);

    let bad = temp_file("n=2\n00->01\n00->11\n");
    let dup = bdsym(&["show", bad.path().to_str().unwrap()]);
    assert_eq!(code(&dup), 2);
    assert!(stderr(&dup).contains("line 3"));
    assert!(stderr(&dup).contains("duplicate"));

    let incomplete = temp_file("n=2\n00->01\n");
    let miss = bdsym(&["show", incomplete.path().to_str().unwrap()]);
    assert_eq!(code(&miss), 2);
    assert!(stderr(&miss).contains("missing row"));
}

#[test]
fn usage_errors_exit_two() {
    let out = bdsym(&["no-such-command"]);
    assert_eq!(code(&out), 2);
    let short = bdsym(&["orbit", &fixture("exa2.fn")]);
    assert_eq!(code(&short), 2);
}

#[test]
fn bad_start_state_exits_two() {
    let sched = temp_file("n=2\n11\n");
    let out = bdsym(&[
        "orbit",
        &fixture("exa2.fn"),
        sched.path().to_str().unwrap(),
        "0101",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("2-bit"));
}

#[test]
fn search_cap_env_override() {
    // n = 3 sits above a cap of 2, so the search refuses
    let refused = bdsym_env(
        &["aut", &fixture("exa17.fn"), "--count"],
        "BDSYM_MAX_N",
        "2",
    );
    assert_eq!(code(&refused), 2);
    assert!(stderr(&refused).contains("too large"));

    let bad = bdsym_env(&["aut", &fixture("exa17.fn")], "BDSYM_MAX_N", "many");
    assert_eq!(code(&bad), 2);
}
