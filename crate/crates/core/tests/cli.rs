//! The `az` binary end to end: output formats, the cache and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use az_core::report::{parse_outcomes_csv, Report};

fn az(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_az"))
        .args(args)
        .current_dir(dir)
        .env_remove("AZ_CACHE")
        .output()
        .expect("az runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn without_timestamp(report: &str) -> String {
    let mut r = Report::from_json_lines(report).expect("valid report");
    r.metadata.timestamp.clear();
    r.to_json_lines()
}

#[test]
fn seq_prints_one_row_per_n() {
    let dir = tempfile::tempdir().unwrap();
    let out = az(dir.path(), &["seq", "AZ_A", "0", "1..5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "family,index,n,value\nAZ_A,0,1,-3\nAZ_A,0,2,9\nAZ_A,0,3,-3\nAZ_A,0,4,-279\nAZ_A,0,5,2997\n");

    let out = az(
        dir.path(),
        &["seq", "APERY", "—", "0..2", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<String> = stdout(&out)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["value"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(values, ["1", "5", "73"]);

    let out = az(dir.path(), &["seq", "B", "1", "1..2"]);
    let table = stdout(&out);
    assert!(table.lines().nth(1).unwrap().ends_with("-3"));
    assert!(table.lines().nth(2).unwrap().ends_with("18"));

    let cache = std::fs::read_to_string(dir.path().join("az-cache.jsonl")).unwrap();
    assert!(cache.contains(r#"{"family":"AZ_A","index":0,"n":5,"num":"2997","den":"1"}"#));
    assert!(cache.contains(r#"{"family":"APERY","index":0,"n":2,"num":"73","den":"1"}"#));
}

#[test]
fn seq_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["seq", "FOO", "0", "1..3"][..],
        &["seq", "B", "0", "1..3"],
        &["seq", "AZ_A", "x", "1..3"],
        &["seq", "AZ_A", "0", "3..1"],
        &["seq", "AZ_A", "0"],
    ] {
        assert_eq!(az(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = az(
        dir.path(),
        &["verify", "MAIN_SUPERCONGRUENCE", "p=5", "n=1"],
    );
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("status    pass"));

    let hyp = az(dir.path(), &["verify", "THM31_VANISH", "p=5", "i=2", "n=1"]);
    assert_eq!(hyp.status.code(), Some(2));
    assert!(stderr(&hyp).contains("i < p/3"));

    let t1 = az(dir.path(), &["verify", "T1", "p=7", "--format", "json"]);
    assert_eq!(t1.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&t1).trim()).unwrap();
    assert_eq!(v["achieved_valuation"], 2);
    assert_eq!(v["lhs"], "447636893/1291401630");

    let fail = az(
        dir.path(),
        &[
            "verify",
            "CLOSECONG",
            "p=5",
            "m=1",
            "n=6",
            "--format",
            "csv",
        ],
    );
    assert_eq!(fail.status.code(), Some(1));
    let rows = parse_outcomes_csv(&stdout(&fail)).unwrap();
    assert!(rows[0]
        .note
        .starts_with("statement violated at params p=5 m=1 n=6"));

    let mort = az(dir.path(), &["verify", "MORT", "n=4", "y=-1/2"]);
    assert_eq!(mort.status.code(), Some(0));

    for args in [
        &["verify", "NOPE", "p=5"][..],
        &["verify", "T1"],
        &["verify", "T1", "p=9"],
        &["verify", "T1", "p=3"],
        &["verify", "T1", "p=5", "n=1"],
        &["verify", "T1", "p=five"],
        &["verify", "T1", "p5"],
        &["verify", "MORT", "n=2", "y=-1"],
    ] {
        assert_eq!(az(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = az(
        dir.path(),
        &[
            "scan",
            "MAIN_SUPERCONGRUENCE",
            "--primes",
            "5,7,11",
            "--n",
            "1..8",
            "--format",
            "json",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json_lines(&stdout(&out)).unwrap();
    assert_eq!(report.outcomes.len(), 24);
    assert!(report.outcomes.iter().all(|o| o.passed));

    let out = az(
        dir.path(),
        &["scan", "T1,T2,T3", "--primes", "5..31", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        Report::from_json_lines(&stdout(&out))
            .unwrap()
            .summary
            .passed,
        27
    );

    for args in [
        &["scan", "T1", "--primes", "24..28"][..],
        &["scan", "IDH", "--n", "5..1"],
        &["scan", "--primes", "5,9"],
        &["scan", "NOPE"],
        &["scan", "--range", "zz=1..2"],
        &["scan", "--range", "m"],
        &["scan", "--jobs", "0"],
    ] {
        assert_eq!(az(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_failures_exit_one_and_conjectures_are_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let out = az(
        dir.path(),
        &["scan", "CLOSECONG", "--primes", "5", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(1));
    let report = Report::from_json_lines(&stdout(&out)).unwrap();
    assert_eq!(report.summary.failed, 2);
    assert_eq!(report.summary.conjectural_failed, 0);

    let out = az(
        dir.path(),
        &[
            "scan",
            "CONJ71_FIRST,B1,HIGHER",
            "--primes",
            "5",
            "--n",
            "1..2",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FLAGGED"));
}

#[test]
fn warm_cache_reports_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "scan",
        "MAIN_SUPERCONGRUENCE,B1,CONJ71_SECOND,REDUCTION_POWER",
        "--primes",
        "5,7",
        "--format",
        "json",
    ];
    let cold = az(dir.path(), &args);
    let cache_after_cold = std::fs::read(dir.path().join("az-cache.jsonl")).unwrap();
    let warm = az(dir.path(), &args);
    let warmer = az(dir.path(), &[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(cold.status.code(), warm.status.code());
    assert_eq!(
        without_timestamp(&stdout(&cold)),
        without_timestamp(&stdout(&warm))
    );
    assert_eq!(
        std::fs::read(dir.path().join("az-cache.jsonl")).unwrap(),
        cache_after_cold
    );
    let mut parallel = Report::from_json_lines(&stdout(&warmer)).unwrap();
    parallel.metadata.jobs = 1;
    parallel.metadata.timestamp.clear();
    assert_eq!(parallel.to_json_lines(), without_timestamp(&stdout(&cold)));
}

#[test]
fn cache_location_and_unreadable_cache() {
    let dir = tempfile::tempdir().unwrap();
    let custom = dir.path().join("custom.jsonl");
    std::fs::write(&custom, "{ not json\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_az"))
        .args([
            "scan",
            "MAIN_SUPERCONGRUENCE",
            "--primes",
            "5",
            "--n",
            "1..2",
            "--format",
            "json",
        ])
        .current_dir(dir.path())
        .env("AZ_CACHE", &custom)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json_lines(&stdout(&out)).unwrap();
    assert_eq!(report.metadata.warnings.len(), 1);
    assert!(report.metadata.warnings[0].contains("recomputing"));
    assert!(!dir.path().join("az-cache.jsonl").exists());
    let rewritten = std::fs::read_to_string(&custom).unwrap();
    assert!(rewritten.contains(r#""n":10,"num":"69363009""#));

    // the flag wins over the environment
    let flagged = dir.path().join("flag.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_az"))
        .args(["seq", "AZ_A", "1", "1..3", "--cache"])
        .arg(&flagged)
        .current_dir(dir.path())
        .env("AZ_CACHE", &custom)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&flagged)
        .unwrap()
        .contains(r#""index":1,"n":3"#));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = az(
        dir.path(),
        &[
            "scan", "T1", "--primes", "5,7", "--format", "csv", "--out", "r.csv",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("total 2: 2 passed"));
    let rows =
        parse_outcomes_csv(&std::fs::read_to_string(dir.path().join("r.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 2);

    let bad = az(
        dir.path(),
        &["verify", "T1", "p=5", "--out", "missing/dir/r.txt"],
    );
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let help = az(dir.path(), &["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("scan"));
    assert_eq!(az(dir.path(), &["--version"]).status.code(), Some(0));
    assert_eq!(az(dir.path(), &[]).status.code(), Some(2));
}
