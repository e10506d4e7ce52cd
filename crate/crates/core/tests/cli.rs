//! Exit codes and output formats of the command-line tool.

use std::path::Path;
use std::process::{Command, Output};

use boilfp::fixtures::worked_example;
use boilfp::toolkit::format;

fn boilfp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boilfp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_csv_lists_points_with_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "w.toml", &format::to_string(&worked_example()));
    for objective in ["f1", "f2"] {
        let out = boilfp(&["solve", &path, "--format", "csv", "--objective", objective]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("point"));
        assert_eq!(lines.count(), 3);
    }
}

#[test]
fn check_and_trace_on_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "w.toml", &format::to_string(&worked_example()));
    let out = boilfp(&["check", &path, "--strategy", "bfs"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("agree"));
    let out = boilfp(&["trace", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fathom"));
}

#[test]
fn generate_then_check_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.toml");
    let path = path.to_str().unwrap();
    let out = boilfp(&["generate", "--n", "3", "--m", "4", "--k", "2", "--seed", "5", "--out", path]);
    assert_eq!(out.status.code(), Some(0));
    let inst = format::load(path).unwrap();
    assert_eq!((inst.n(), inst.m(), inst.k()), (3, 4, 2));
    assert_eq!(boilfp(&["check", path]).status.code(), Some(0));
}

#[test]
fn bench_prints_summary_csv() {
    let out = boilfp(&["bench", "--groups", "2:3:2", "--seeds", "2", "--budget", "100000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,m,n,cpu_mean,cpu_max,cpu_min,nodes_mean,nodes_max,nodes_min,mu");
    assert!(lines[1].starts_with("2,3,2,"));
}

#[test]
fn parse_error_exits_with_3_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let text = format::to_string(&worked_example()).replace("b = [0, 8]", "b = [0, 8.5]");
    let path = write(dir.path(), "bad.toml", &text);
    let out = boilfp(&["solve", &path]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains('b'), "{err}");
}

#[test]
fn assumption_violations_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut inst = worked_example();
    inst.criteria[2].denominator = boilfp::AffineForm::from_ints(&[-1, 0], 1);
    let path = write(dir.path(), "neg.toml", &format::to_string(&inst));
    assert_eq!(boilfp(&["solve", &path]).status.code(), Some(2));

    let mut inst = worked_example();
    inst.a = vec![vec![(-1).into(), 1.into()]];
    inst.b = vec![0.into()];
    let path = write(dir.path(), "unbounded.toml", &format::to_string(&inst));
    assert_eq!(boilfp(&["solve", &path]).status.code(), Some(2));
}

#[test]
fn limits_exit_with_4() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "w.toml", &format::to_string(&worked_example()));
    assert_eq!(boilfp(&["solve", &path, "--max-nodes", "2"]).status.code(), Some(4));
    assert_eq!(boilfp(&["enumerate", &path, "--budget", "3"]).status.code(), Some(4));
}
