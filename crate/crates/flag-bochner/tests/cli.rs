use std::process::{Command, Output};

use flag_bochner::report::{verdict_of, CaseReport};
use flag_bochner::sweep::SweepReport;
use flag_bochner_core::bochner::classify;
use flag_bochner_core::lie::{Family, GroupSpec, PaintedDiagram};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flag-bochner")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn grassmannian_is_bochner() {
    let out = ok(&["--group", "SU:4", "--black", "2"]);
    assert!(out.contains("complex dimension: 4"));
    assert!(out.contains("verdict: BochnerForAllC"));
    assert!(out.contains("higher-degree terms not examined"));
}

#[test]
fn fork_painting_needs_c1_twice_cd() {
    let out = ok(&["--group", "SOeven:5", "--black", "1,5"]);
    assert!(out.contains("verdict: BochnerIff iff c1 - 2*c5 = 0"), "{out}");
}

#[test]
fn odd_orthogonal_end_nodes_never_bochner() {
    let out = ok(&["--group", "SOodd:3", "--black", "1,3"]);
    assert!(out.contains("verdict: NeverBochner"));
    assert!(out.contains("z[-e1-e3]*zb[-e1]*zb[-e3]"));
}

#[test]
fn bad_input_exits_with_1() {
    for args in [
        &["--group", "SU:x", "--black", "1"][..],
        &["--group", "XY:3", "--black", "1"],
        &["--group", "SU:4", "--black", "4"],
        &["--group", "SU:4", "--black", "1,,2"],
        &["--group", "SOeven:4", "--black", "3"],
        &["--group", "SU:4", "--black", "1,2", "--coeffs", "1"],
        &["--group", "SU:4", "--black", "1", "--coeffs", "-1"],
        &["--group", "SU:4", "--black", "1", "--max-degree", "1"],
        &["--group", "SU:4", "--black", "1", "--audit-degree", "3"],
        &["--group", "SU:4", "--black", "1", "--numeric-check"],
        &["--sweep", "--families", "SU,G2"],
        &["--sweep", "--max-rank", "40"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).starts_with("error: "), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_errors_carry_a_column() {
    let o = run(&["--group", "SU:4", "--black", "1,x"]);
    assert!(stderr(&o).contains("column 3"), "{}", stderr(&o));
}

#[test]
fn failed_numeric_check_exits_with_3() {
    let o = run(&[
        "--group",
        "SU:3",
        "--black",
        "1,2",
        "--coeffs",
        "1,1",
        "--numeric-check",
        "--max-degree",
        "3",
        "--audit-degree",
        "4",
        "--radius",
        "0.3",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("worst sample"));
    assert!(stdout(&o).contains("result: FAIL"));
}

#[test]
fn numeric_check_on_projective_plane() {
    let out = ok(&[
        "--group",
        "SU:3",
        "--black",
        "1",
        "--coeffs",
        "1",
        "--numeric-check",
        "--samples",
        "10",
        "--emit",
        "json",
    ]);
    let report: CaseReport = serde_json::from_str(&out).unwrap();
    let check = report.numeric_check.unwrap();
    assert!(check.passed());
    assert_eq!(check.samples.len(), 10);
    assert_eq!(check.origin_potential, 0.0);
    assert!(check.hessian_max_error < 1e-6);
}

#[test]
fn full_flag_of_su3_truncation() {
    let out = ok(&["--group", "SU:3", "--black", "1,2", "--coeffs", "1,1", "--numeric-check", "--emit", "json"]);
    let report: CaseReport = serde_json::from_str(&out).unwrap();
    let check = report.numeric_check.unwrap();
    assert_eq!(check.radius, 0.05);
    assert!(check.samples.iter().all(|s| s.error < 1e-5));
}

#[test]
fn json_round_trips_the_verdict() {
    for (g, f, d, black) in [
        ("Sp:3", Family::C, 3, "1,3"),
        ("SOeven:4", Family::D, 4, "1,4"),
        ("SU:5", Family::A, 5, "1,2,4"),
        ("SOodd:4", Family::B, 4, "2"),
    ] {
        let out = ok(&["--group", g, "--black", black, "--emit", "json"]);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["schema_version"], 1);
        let report: CaseReport = serde_json::from_value(value).unwrap();
        let nodes: Vec<usize> = black.split(',').map(|s| s.parse().unwrap()).collect();
        let diagram = PaintedDiagram::new(GroupSpec::new(f, d).unwrap(), &nodes).unwrap();
        assert_eq!(verdict_of(&report).unwrap(), classify(&diagram, 3).unwrap(), "{g} {black}");
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", out);
    }
}

#[test]
fn output_is_deterministic() {
    let case =
        ["--group", "SOodd:3", "--black", "1,3", "--coeffs", "2,1", "--numeric-check", "--seed", "5", "--emit", "json"];
    assert_eq!(ok(&case), ok(&case));
    let sweep = ["--sweep", "--max-rank", "4", "--emit", "json"];
    assert_eq!(ok(&sweep), ok(&sweep));
}

fn sweep(args: &[&str]) -> SweepReport {
    let mut all = vec!["--sweep", "--emit", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn sweep_su_pairs_need_equal_parameters() {
    let r = sweep(&["--families", "SU", "--max-rank", "4", "--max-black", "2"]);
    assert_eq!(r.schema_version, 1);
    for row in r.rows.iter().filter(|row| row.black.len() == 2) {
        assert_eq!(row.verdict.status, "BochnerIff");
        assert_eq!(row.verdict.constraints, vec![format!("c{} - c{}", row.black[0], row.black[1])]);
    }
}

#[test]
fn sweep_sp_only_single_nodes_are_bochner() {
    let r = sweep(&["--families", "Sp", "--max-rank", "4"]);
    for row in &r.rows {
        assert_eq!(row.verdict.status != "NeverBochner", row.black.len() == 1, "{:?}", row.black);
    }
}

#[test]
fn sweep_even_orthogonal_conditional_rows() {
    let r = sweep(&["--families", "SOeven", "--max-rank", "6"]);
    let conditional: Vec<(usize, Vec<usize>)> = r
        .rows
        .iter()
        .filter(|row| row.verdict.status == "BochnerIff")
        .map(|row| (row.rank, row.black.clone()))
        .collect();
    assert_eq!(conditional, (3..=6).map(|d| (d, vec![1, d])).collect::<Vec<_>>());
}

#[test]
fn sweep_table_lists_every_row() {
    let out = ok(&["--sweep", "--families", "SU", "--max-rank", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("group"));
    assert_eq!(lines.len(), 1 + 1 + 3 + 1);
    assert!(out.contains("SU(3)      {1,2}         3  BochnerIff      c1 - c2 = 0"), "{out}");
}

#[test]
fn usage_errors_exit_with_1() {
    assert_eq!(run(&["--group", "SU:3"]).status.code(), Some(1));
    assert_eq!(run(&["--sweep", "--group", "SU:3"]).status.code(), Some(1));
    assert_eq!(run(&["--emit", "xml", "--sweep"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
