use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

fn linrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(p: PathBuf) -> String {
    p.to_str().unwrap().to_string()
}

#[test]
fn info_first_line() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "dim_x=2\ndim_y=2\n1 0 1 0\n0 1 0 1\n",
            "dom=2 ran=2 ker=0 mul=0 operator=yes",
        ),
        (
            "dim_x=2\ndim_y=2\n0 0 1 0\n0 0 0 1\n",
            "dom=0 ran=2 ker=0 mul=2 operator=no",
        ),
        (
            "dim_x=2\ndim_y=2\n1 0 1 0\n0 1 0 0\n",
            "dom=2 ran=1 ker=1 mul=0 operator=yes",
        ),
    ];
    for (i, (text, first)) in cases.iter().enumerate() {
        let f = write(dir.path(), &format!("r{i}.rel"), text);
        let o = linrel(&["info", &f]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().next(), Some(*first));
    }
    let o = linrel(&["info", &path(fixture("relations/15_symmetric_graph.rel"))]);
    assert!(stdout(&o).contains("selfadjoint=yes"));
    assert!(stdout(&o).contains("ker: {0}"));
}

#[test]
fn parse_errors_name_line_and_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.rel", "dim_x=1\ndim_y=1\n1 2\n1 x\n");
    let o = linrel(&["info", &f]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(
        err.contains("bad.rel") && err.contains("line 4") && err.contains("entry 2"),
        "{err}"
    );

    let o = linrel(&["info", "/nonexistent/file.rel"]);
    assert_eq!(o.status.code(), Some(1));
    let o = linrel(&["solve", "--side", "up", "a", "b"]);
    assert_eq!(o.status.code(), Some(1));
    let o = linrel(&["bogus"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(linrel(&["--help"]).status.code(), Some(0));
}

#[test]
fn solve_writes_witness_that_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let t = path(dir.path().join("t.rel"));
    let (a, b) = (
        path(fixture("solve/a_times3.rel")),
        path(fixture("solve/b_diag10.rel")),
    );
    let o = linrel(&[
        "solve", "--side", "right", "--level", "operator", &a, &b, "--out", &t,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("solvable=yes"));
    assert_eq!(
        fs::read_to_string(&t).unwrap(),
        "dim_x=2\ndim_y=2\n1 0 3 0\n0 1 0 0\n"
    );
    let o = linrel(&["verify", "--side", "right", &a, &b, &t]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "verified=yes\n");
    // the same T does not factor the identity
    let id = path(fixture("relations/01_identity2.rel"));
    let o = linrel(&["verify", "--side", "right", &id, &b, &t]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_level_and_side_dispatches() {
    let a = path(fixture("relations/04_projection.rel"));
    let b = path(fixture("relations/01_identity2.rel"));
    for side in ["left", "right"] {
        for level in ["relation", "operator", "adjoint"] {
            let o = linrel(&["solve", "--side", side, "--level", level, &a, &b]);
            assert_eq!(o.status.code(), Some(0), "{side} {level}: {}", stdout(&o));
            assert!(stdout(&o).starts_with(&format!("side={side}\nlevel={level}\n")));
        }
    }
}

#[test]
fn solve_json_report() {
    let (a, b) = (
        path(fixture("solve/a_range_e2.rel")),
        path(fixture("solve/b_diag10.rel")),
    );
    let o = linrel(&[
        "solve", "--side", "right", "--level", "relation", "--json", &a, &b,
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["side"], "right");
    assert_eq!(v["solvable"], false);
    assert_eq!(v["conditions"][0]["name"], "ran_subset");
    assert_eq!(v["conditions"][0]["held"], false);
    assert!(v["witness"].is_null());
}

#[test]
fn compose_with_identity_is_canonical_copy() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.rel", "dim_x=2\ndim_y=2\n1 0 1 0\n0 1 0 1\n");
    for name in [
        "05_nilpotent",
        "11_dependent_generators",
        "03_pure_multivalued",
    ] {
        let a = path(fixture(&format!("relations/{name}.rel")));
        let golden = fs::read_to_string(fixture(&format!("relations/{name}.canon"))).unwrap();
        let o = linrel(&["compose", &id, &a]);
        assert_eq!(stdout(&o), golden, "{name}");
        let o = linrel(&["compose", &a, &id]);
        assert_eq!(stdout(&o), golden, "{name}");
    }
}

#[test]
fn compose_order_is_left_after_right() {
    let dir = tempfile::tempdir().unwrap();
    // P projects onto e1, N maps e1 -> e2; N P = N and P N = 0
    let p = write(dir.path(), "p.rel", "dim_x=2\ndim_y=2\n1 0 1 0\n0 1 0 0\n");
    let n = write(dir.path(), "n.rel", "dim_x=2\ndim_y=2\n1 0 0 1\n0 1 0 0\n");
    assert_eq!(
        stdout(&linrel(&["compose", &n, &p])),
        "dim_x=2\ndim_y=2\n1 0 0 1\n0 1 0 0\n"
    );
    assert_eq!(
        stdout(&linrel(&["compose", &p, &n])),
        "dim_x=2\ndim_y=2\n1 0 0 0\n0 1 0 0\n"
    );
    let o = linrel(&[
        "compose",
        &p,
        &path(fixture("relations/12_rectangular_3x1.rel")),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn inverse_and_adjoint() {
    let n = path(fixture("relations/05_nilpotent.rel"));
    assert_eq!(
        stdout(&linrel(&["inverse", &n])),
        "dim_x=2\ndim_y=2\n1 0 0 1\n0 0 1 0\n"
    );
    // graph([[0,1],[0,0]])* = graph([[0,0],[1,0]])
    assert_eq!(
        stdout(&linrel(&["adjoint", &n])),
        "dim_x=2\ndim_y=2\n1 0 0 1\n0 1 0 0\n"
    );
    let o = linrel(&[
        "adjoint",
        &path(fixture("relations/12_rectangular_3x1.rel")),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_is_deterministic_and_honours_profile() {
    let args = [
        "gen", "--dim-x", "3", "--dim-y", "3", "--dom", "2", "--mul", "1", "--ker", "1", "--seed",
        "42",
    ];
    let first = stdout(&linrel(&args));
    assert_eq!(first, stdout(&linrel(&args)));
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.rel", &first);
    assert_eq!(
        stdout(&linrel(&["info", &f])).lines().next(),
        Some("dom=2 ran=2 ker=1 mul=1 operator=no")
    );
    let o = linrel(&[
        "gen", "--dim-x", "2", "--dim-y", "2", "--dom", "3", "--mul", "0", "--ker", "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = linrel(&["gen", "--dim-x", "2", "--dim-y", "2", "--dom", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_single_suite() {
    let o = linrel(&[
        "check",
        "--suite",
        "right_operator_iff",
        "--cases",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("suite=right_operator_iff\ncases=200\nseed=7\npassed=200\nfailed=0\n"));
    assert!(out.ends_with("counterexample=none\n"));
    let o = linrel(&["check", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    let o = linrel(&[
        "check",
        "--suite",
        "inverse_identities",
        "--cases",
        "5",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["passed"], 5);
}
