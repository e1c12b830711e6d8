use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn xint(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xint"))
        .args(args)
        .current_dir(dir)
        .env_remove("XINT_SEARCH_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn workspace() -> TempDir {
    let dir = TempDir::new().unwrap();
    fs::write(
        dir.path().join("k33.txt"),
        "x_count 3\ny_count 3\nedges 9\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n",
    )
    .unwrap();
    fs::write(
        dir.path().join("path.txt"),
        "x_count 2\ny_count 2\nedges 3\n0 0\n0 1\n1 1\n",
    )
    .unwrap();
    dir
}

#[test]
fn color_general_prints_certificate() {
    let dir = workspace();
    let out = xint(
        &["color", "k33.txt", "--method", "general", "--out", "c.txt"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("method=general guaranteed_bound=18"),
        "{text}"
    );
    assert!(text.contains("verified=true"));
    let verify = xint(&["verify", "k33.txt", "c.txt"], dir.path());
    assert_eq!(code(&verify), 0);
}

#[test]
fn every_method_reports_a_certificate() {
    let dir = workspace();
    for m in [
        "auto",
        "biregular",
        "general",
        "multigraph",
        "delta6",
        "palette",
    ] {
        let out = xint(&["color", "k33.txt", "--method", m], dir.path());
        assert_eq!(code(&out), 0, "{m}");
        assert!(stdout(&out).starts_with("method="));
    }
    let out = xint(
        &["color", "path.txt", "--method", "delta6_restricted"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn tampered_coloring_fails_verification() {
    let dir = workspace();
    fs::write(
        dir.path().join("bad.txt"),
        "max_color 3\ncolors 1 1 3 2 3 1 3 2 2\n",
    )
    .unwrap();
    let out = xint(&["verify", "k33.txt", "bad.txt"], dir.path());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("proper=false"));

    fs::write(dir.path().join("gap.txt"), "max_color 3\ncolors 1 3 2\n").unwrap();
    let out = xint(&["verify", "path.txt", "gap.txt"], dir.path());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("gap at x0"));
}

#[test]
fn preconditions_exit_three() {
    let dir = workspace();
    let out = xint(&["color", "path.txt", "--method", "biregular"], dir.path());
    assert_eq!(code(&out), 3);
    let out = xint(
        &["color", "k33.txt", "--method", "delta6_restricted"],
        dir.path(),
    );
    assert_eq!(code(&out), 3);
    let out = xint(&["decompose", "path.txt"], dir.path());
    assert_eq!(code(&out), 3);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = workspace();
    assert_eq!(code(&xint(&[], dir.path())), 2);
    assert_eq!(code(&xint(&["color", "missing.txt"], dir.path())), 2);
    fs::write(
        dir.path().join("broken.txt"),
        "x_count 1\ny_count 1\nedges 1\n0 5\n",
    )
    .unwrap();
    let out = xint(&["color", "broken.txt"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4, column 3"));
    assert_eq!(code(&xint(&["search"], dir.path())), 2);
}

#[test]
fn gen_exact_decompose_and_dot() {
    let dir = workspace();
    let out = xint(
        &[
            "gen",
            "biregular",
            "2",
            "3",
            "6",
            "--seed",
            "4",
            "--out",
            "b.txt",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let out = xint(&["decompose", "b.txt"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("parts "));

    let out = xint(&["exact", "k33.txt", "--out", "opt.txt"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("chi_int=3 "));
    assert_eq!(
        code(&xint(&["verify", "k33.txt", "opt.txt"], dir.path())),
        0
    );
    assert_eq!(
        code(&xint(&["exact", "k33.txt", "--budget", "0"], dir.path())),
        1
    );

    let out = xint(&["color", "k33.txt", "--dot", "k33.dot"], dir.path());
    assert_eq!(code(&out), 0);
    let dot = fs::read_to_string(dir.path().join("k33.dot")).unwrap();
    assert!(dot.starts_with("graph bipartite {"));
}

#[test]
fn budget_from_environment_and_flag() {
    let dir = workspace();
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["exact", "k33.txt"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_xint"))
            .args(&args)
            .current_dir(dir.path())
            .env("XINT_SEARCH_BUDGET", env)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("0", &[])), 1);
    assert_eq!(code(&run("0", &["--budget", "1000"])), 0);
}

#[test]
fn search_resumes_from_frontier() {
    let dir = workspace();
    let args = [
        "search",
        "--frontier",
        "f.txt",
        "--budget",
        "30",
        "trees",
        "9",
        "--count",
        "12",
    ];
    let out = xint(&args, dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status=interrupted"));
    let frontier = fs::read_to_string(dir.path().join("f.txt")).unwrap();
    assert!(frontier.starts_with("xint-frontier v1\n"));

    let mut last = String::new();
    for _ in 0..50 {
        let out = xint(
            &["search", "--frontier", "f.txt", "--budget", "30"],
            dir.path(),
        );
        assert_eq!(code(&out), 0);
        last = stdout(&out);
        if last.contains("status=complete") {
            break;
        }
    }
    assert!(
        last.contains("status=complete graphs_examined=12"),
        "{last}"
    );

    let full = xint(
        &[
            "search", "--report", "r.json", "trees", "9", "--count", "12",
        ],
        dir.path(),
    );
    let first = |s: &str| {
        s.lines()
            .next()
            .unwrap()
            .split(" budget_spent")
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(first(&stdout(&full)), first(&last));
    assert!(dir.path().join("r.json").exists());
}
