//! Contract tests for the `jacklr` binary: output shapes, the exit-status
//! convention (0 clean / 2 counterexamples / 1 operational error), and
//! cache transparency.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jacklr"))
}

fn run(args: &[&str], cache: &Path) -> Output {
    bin()
        .args(args)
        .arg("--cache")
        .arg(cache)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "unexpected failure: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn lr_single_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path();
    assert_eq!(stdout(&run(&["lr", "2,1", "2,1", "3,2,1"], c)), "2\n");
    assert_eq!(
        stdout(&run(&["lr", "1", "1"], c)),
        "(2): 1\n(1,1): 1\n"
    );
    assert_eq!(
        stdout(&run(&["lr", "1", "1", "--json"], c)),
        "{\"coeffs\":{\"2\":1,\"1,1\":1}}\n"
    );
    assert_eq!(
        stdout(&run(&["lr", "2,1", "2,1", "3,2,1", "--json"], c)),
        "{\"coeff\":2}\n"
    );
}

#[test]
fn jack_symbolic_and_evaluated() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path();
    assert_eq!(
        stdout(&run(&["jack", "2", "2"], c)),
        "m[2] + (2 / (a + 1))*m[1,1]\n"
    );
    assert_eq!(stdout(&run(&["jack", "1,1", "2"], c)), "m[1,1]\n");
    assert_eq!(
        stdout(&run(&["jack", "2", "2", "--at", "1"], c)),
        "m[2] + m[1,1]\n"
    );
    assert_eq!(
        stdout(&run(&["jack", "2", "2", "--json"], c)),
        "{\"coeffs\":{\"2\":\"1\",\"1,1\":\"2 / (a + 1)\"}}\n"
    );
}

#[test]
fn struct_table_rank_and_evaluation() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path();
    assert_eq!(
        stdout(&run(&["struct", "1", "1"], c)),
        "(2): 1\n(1,1): 2*a / (a + 1)\n"
    );
    assert_eq!(
        stdout(&run(&["struct", "1", "1", "--at", "1"], c)),
        "(2): 1\n(1,1): 1\n"
    );
    assert_eq!(stdout(&run(&["struct", "1", "1", "--rank", "1"], c)), "(2): 1\n");
    assert_eq!(
        stdout(&run(&["struct", "1", "1", "--json"], c)),
        "{\"coeffs\":{\"2\":\"1\",\"1,1\":\"2*a / (a + 1)\"}}\n"
    );
}

#[test]
fn cache_round_trip_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path();
    let cold = stdout(&run(&["jack", "3,1", "4"], c));
    assert!(c.read_dir().unwrap().next().is_some(), "cache file created");
    let warm = stdout(&run(&["jack", "3,1", "4"], c));
    assert_eq!(cold, warm, "cache changed the output bytes");

    // a truncated record is discarded and recomputed, not trusted
    for entry in c.read_dir().unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    }
    let repaired = stdout(&run(&["jack", "3,1", "4"], c));
    assert_eq!(cold, repaired, "corrupted cache leaked into the output");
}

#[test]
fn scan_exit_codes_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path();
    let report_path = dir.path().join("report.json");

    let out = bin()
        .args(["scan", "duality", "--max-size", "3", "--json", "--out"])
        .arg(&report_path)
        .arg("--cache")
        .arg(c)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "clean scan exits 0");
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.starts_with("{\"format_version\":1,"));
    assert_eq!(
        std::fs::read_to_string(&report_path).unwrap(),
        body,
        "--out must receive exactly the stdout JSON"
    );

    // operational errors exit 1
    for args in [
        &["scan", "nope"][..],
        &["scan", "stanley", "--max-size", "9"][..],
        &["lr", "not-a-partition", "1"][..],
        &["jack", "2,1", "1"][..],
    ] {
        let out = run(args, c);
        assert_eq!(
            out.status.code(),
            Some(1),
            "expected exit 1 for {args:?}; stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty(), "errors must be reported");
    }

    // help is not an error
    let out = bin().arg("--help").output().expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_case_lists_reattach_numeric_segments() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "scan", "prop61", "--max-size", "2", "--cases", "sp:2,su:2,2",
            "--json",
        ],
        dir.path(),
    );
    let body = stdout(&out);
    assert!(
        body.contains("\"cases\":[\"sp:2\",\"su:2,2\"]"),
        "case list parsed wrong: {body}"
    );
}

#[test]
fn jack_env_var_selects_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["jack", "2,1", "3"])
        .env("JACKLR_CACHE", dir.path())
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(
        dir.path().read_dir().unwrap().next().is_some(),
        "JACKLR_CACHE was ignored"
    );
}
