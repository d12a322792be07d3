use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn unitrack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitrack"))
        .args(args)
        .env("UNITRACK_THREADS", "2")
        .output()
        .expect("spawn unitrack")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn status_of(table: &str, claim: &str) -> String {
    table
        .lines()
        .find(|l| l.starts_with(claim))
        .and_then(|l| l.split_whitespace().nth(1))
        .unwrap_or_else(|| panic!("no row for {claim} in\n{table}"))
        .to_string()
}

fn run_into(dir: &Path, extra: &[&str]) -> Output {
    let out = dir.to_str().unwrap();
    let mut args = vec!["run", "--out", out];
    args.extend_from_slice(extra);
    unitrack(&args)
}

#[test]
fn finn_run_writes_all_artifacts() {
    let tmp = TempDir::new().unwrap();
    let o = run_into(
        tmp.path(),
        &["--seed", "finn", "--amplitude", "4", "--depth", "5"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for d in 0..=5 {
        let text = fs::read_to_string(tmp.path().join(format!("depth_{d}.csv"))).unwrap();
        assert!(text.starts_with("t,x,y,tx,ty,speed,curvature\n"));
    }
    assert!(!tmp.path().join("depth_6.csv").exists());

    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["depth_max"], 5);
    assert_eq!(manifest["jet_budget"], 10);
    assert_eq!(manifest["seed"]["kind"], "finn_bump");
    assert_eq!(manifest["curves"].as_array().unwrap().len(), 6);
    assert_eq!(manifest["metrics"].as_array().unwrap().len(), 6);
    assert_eq!(manifest["wall_clock_seconds"].as_array().unwrap().len(), 6);
    assert!(manifest["first_non_graph_depth"].as_u64().is_some());

    let svg = fs::read_to_string(tmp.path().join("unitrack.svg")).unwrap();
    assert_eq!(svg.matches("<path ").count(), 6);

    let table = stdout(&o);
    for claim in ["A_", "C_", "D_", "F_", "P52_", "P61_", "I_"] {
        assert_eq!(status_of(&table, claim), "pass", "{claim}");
    }
    assert!(table.contains("first non-graph depth: 2"));
}

#[test]
fn straight_run_is_trivial() {
    let tmp = TempDir::new().unwrap();
    let o = run_into(
        tmp.path(),
        &["--seed", "straight", "--depth", "3", "--no-svg"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!tmp.path().join("unitrack.svg").exists());
    let table = stdout(&o);
    assert!(!table.contains(" fail "));
    assert!(table.contains("first non-graph depth: none"));

    let v = unitrack(&["verify", "--seed", "straight", "--depth", "3"]);
    assert_eq!(v.status.code(), Some(0));
    for line in stdout(&v).lines().filter(|l| l.contains('_')) {
        let status = line.split_whitespace().nth(1).unwrap_or("");
        assert!(matches!(status, "pass" | "indeterminate" | "yes"), "{line}");
    }
}

#[test]
fn budget_overflow_exits_3() {
    let o = unitrack(&[
        "run",
        "--seed",
        "finn",
        "--depth",
        "100",
        "--out",
        "never_written",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(
        err.contains("OrderBudgetExceeded") || err.contains("budget is 10"),
        "{err}"
    );
    assert!(!Path::new("never_written").exists());
}

#[test]
fn bad_flags_exit_2() {
    for args in [
        vec!["run", "--seed", "circle"],
        vec!["run", "--depth", "-1"],
        vec!["verify", "--theta-max", "2"],
        vec!["verify", "--tol-alg", "0"],
        vec!["verify", "--seed", "custom", "--sharpness", "-1"],
        vec!["frobnicate"],
    ] {
        let o = unitrack(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn manifest_round_trip_and_tamper_detection() {
    let tmp = TempDir::new().unwrap();
    let o = run_into(tmp.path(), &["--depth", "3", "--no-svg"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let manifest = tmp.path().join("manifest.json");
    let m = manifest.to_str().unwrap();

    let v = unitrack(&["verify", "--manifest", m]);
    assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
    assert_eq!(stdout(&v).matches(" identical").count(), 4);

    // reruns are byte-identical
    let again = TempDir::new().unwrap();
    run_into(again.path(), &["--depth", "3", "--no-svg"]);
    for d in 0..=3 {
        let name = format!("depth_{d}.csv");
        assert_eq!(
            fs::read(tmp.path().join(&name)).unwrap(),
            fs::read(again.path().join(&name)).unwrap()
        );
    }

    let csv = tmp.path().join("depth_2.csv");
    let mut text = fs::read_to_string(&csv).unwrap();
    text.push_str("2,0,0,1,0,1,0\n");
    fs::write(&csv, text).unwrap();
    let v = unitrack(&["verify", "--manifest", m]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("depth_2.csv    file differs"));
}

#[test]
fn corrupted_manifest_exits_2() {
    let tmp = TempDir::new().unwrap();
    let path = tmp.path().join("manifest.json");
    for body in [
        "{\"tool\": \"unitrack\"",
        "[]",
        "{\"tool\": \"unitrack\", \"format\": 1}",
    ] {
        fs::write(&path, body).unwrap();
        let o = unitrack(&["verify", "--manifest", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{body}");
        assert!(stderr(&o).contains("manifest"), "{}", stderr(&o));
    }
    let missing = tmp.path().join("absent.json");
    let o = unitrack(&["verify", "--manifest", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let run = |dir: &Path, threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_unitrack"))
            .args([
                "run",
                "--depth",
                "2",
                "--no-svg",
                "--out",
                dir.to_str().unwrap(),
            ])
            .env("UNITRACK_THREADS", threads)
            .output()
            .unwrap()
    };
    assert!(run(a.path(), "1").status.success());
    assert!(run(b.path(), "4").status.success());
    for d in 0..=2 {
        let name = format!("depth_{d}.csv");
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap()
        );
    }
}
