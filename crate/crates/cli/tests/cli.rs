use std::io::Write;
use std::process::{Command, Output, Stdio};

fn twoline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoline")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = twoline(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    twoline(args).status.code().expect("exit code")
}

#[test]
fn count_values() {
    assert_eq!(stdout(&["count", "a", "--k", "2", "--n", "4"]), "4\n");
    assert_eq!(stdout(&["count", "r", "--n", "3"]), "5\n");
    assert_eq!(stdout(&["count", "a", "--k", "1", "--n", "2"]), "0\n");
    assert_eq!(stdout(&["count", "s", "--n", "3", "--k", "3"]), "5\n");
    assert_eq!(stdout(&["count", "m", "--k", "3", "--n", "1"]), "4\n");
    assert_eq!(stdout(&["count", "d", "--k", "3", "--n", "5"]), "10\n");
}

#[test]
fn big_counts_are_exact_in_json() {
    let text = stdout(&["count", "a", "--k", "40", "--n", "40"]);
    let json = stdout(&["count", "a", "--k", "40", "--n", "40", "--format", "json"]);
    assert_eq!(text, "4069232436916151\n");
    assert_eq!(json, text);
    let r = stdout(&["count", "r", "--n", "200"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["count", "r", "--n", "200", "--format", "json"])).unwrap();
    assert_eq!(v.to_string(), r.trim());
}

#[test]
fn tables() {
    assert_eq!(stdout(&["table", "z", "--max", "4", "--format", "csv"]), "1\n1,1\n1,1,1\n1,2,1,1\n1,2,2,2,1\n");
    assert_eq!(stdout(&["table", "a", "--max", "0"]), "1\n");
    let b = stdout(&["table", "b", "--max", "8"]);
    let last: Vec<&str> = b.lines().last().unwrap().split(' ').collect();
    assert_eq!(last[last.len() / 2], "11");
    let bfile = stdout(&["table", "z", "--max", "2", "--format", "bfile"]);
    assert_eq!(bfile, "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n");
    let rows: Vec<Vec<u64>> = serde_json::from_str(&stdout(&["table", "a", "--max", "4", "--format", "json"])).unwrap();
    assert_eq!(rows, vec![vec![1], vec![1, 1, 1], vec![1, 2, 2, 2, 1]]);
}

#[test]
fn enumeration_lines() {
    assert_eq!(stdout(&["enumerate", "s012", "--n", "3", "--k", "3"]).lines().count(), 5);
    assert_eq!(stdout(&["enumerate", "motzkin", "--k", "1", "--n", "1"]), "U\n");
    assert_eq!(stdout(&["enumerate", "weighted", "--cost", "3"]).lines().count(), 5);
    assert_eq!(stdout(&["enumerate", "matching", "--k", "6", "--n", "6", "--limit", "3"]).lines().count(), 3);
    let listed: Vec<String> =
        serde_json::from_str(&stdout(&["enumerate", "chords", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(listed.len().to_string(), stdout(&["count", "a", "--k", "4", "--n", "4"]).trim());
}

#[test]
fn count_matches_enumeration() {
    let lines = |args: &[&str]| stdout(args).lines().count().to_string();
    for (k, n) in [(0, 0), (2, 4), (3, 5), (5, 5), (6, 4)] {
        let (k, n) = (k.to_string(), n.to_string());
        let a = stdout(&["count", "a", "--k", &k, "--n", &n]);
        assert_eq!(lines(&["enumerate", "matching", "--k", &k, "--n", &n]), a.trim());
        let b = stdout(&["count", "b", "--k", &k, "--n", &n]);
        assert_eq!(lines(&["enumerate", "staircase", "--k", &k, "--n", &n]), b.trim());
        assert_eq!(lines(&["enumerate", "steps", "--k", &k, "--n", &n]), b.trim());
        let d = stdout(&["count", "d", "--k", &k, "--n", &n]);
        assert_eq!(lines(&["enumerate", "domino", "--k", &k, "--n", &n]), d.trim());
    }
    for m in 0..=10 {
        for size in 0..=m {
            let (m, size) = (m.to_string(), size.to_string());
            let z = stdout(&["count", "z", "--n", &m, "--k", &size]);
            assert_eq!(lines(&["enumerate", "closed", "--m", &m, "--size", &size]), z.trim());
        }
    }
    for cost in 0..=8 {
        let cost = cost.to_string();
        assert_eq!(lines(&["enumerate", "weighted", "--cost", &cost]), stdout(&["count", "r", "--n", &cost]).trim());
    }
    assert_eq!(lines(&["enumerate", "motzkin", "--k", "6", "--n", "-2"]), stdout(&["count", "m", "--k", "6", "--n", "-2"]).trim());
}

#[test]
fn verification_suites() {
    assert!(stdout(&["verify", "--suite", "triangle", "--max", "16"]).contains("overall pass"));
    assert!(stdout(&["verify", "--suite", "bounds", "--max", "80"]).contains("a(40,40) < 3^39: pass"));
    assert!(stdout(&["verify", "--suite", "fibonacci", "--max", "30"]).contains("overall pass"));
    let report: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--suite", "lacing", "--max", "8", "--format", "json"])).unwrap();
    assert_eq!(report["overall"], true);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn exports() {
    let first = |args: &[&str]| -> Vec<String> {
        stdout(args).lines().map(|l| l.split(' ').nth(1).unwrap().to_string()).collect()
    };
    assert_eq!(first(&["export", "A051286", "--terms", "6"]), ["1", "1", "2", "5", "11", "26"]);
    assert_eq!(first(&["export", "A079487", "--terms", "5"]), ["1"; 5]);
    let lacing = stdout(&["export", "A078698", "--terms", "4"]);
    assert!(lacing.lines().any(|l| l == "3 20"), "{lacing}");
    let b = stdout(&["export", "A125250", "--terms", "10"]);
    assert!(b.starts_with("0 1\n"));
    assert_eq!(b.lines().count(), 10);
}

#[test]
fn map_argument_and_stdin() {
    assert_eq!(stdout(&["map", "closed-set-to-012", "00001110111000"]), "0+0+2+1+2+1+0\n");
    assert_eq!(stdout(&["map", "s1-to-s2", "1+2+2+1+2+1+2"]), "1+5+3+3\n");
    let mut child = Command::new(env!("CARGO_BIN_EXE_twoline"))
        .args(["map", "012-to-motzkin", "--inverse"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"UHD\n\nHHU\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["export", "A079487", "--terms", "15", "--out", p]), "");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["export", "A079487", "--terms", "15"]));
}

#[test]
fn deterministic_output() {
    for args in [
        &["table", "b", "--max", "20", "--format", "json"][..],
        &["enumerate", "lacing", "--k", "3", "--n", "3"],
        &["verify", "--suite", "all", "--max", "8", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    let seq = stdout(&["verify", "--suite", "enumeration", "--max", "8", "--sequential"]);
    assert_eq!(seq, stdout(&["verify", "--suite", "enumeration", "--max", "8"]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "q"]), 2);
    assert_eq!(code(&["count", "a", "--k", "-1"]), 2);
    assert_eq!(code(&["enumerate", "matching", "--k", "2"]), 2);
    assert_eq!(code(&["enumerate", "matching", "--k", "2", "--n", "2", "--format", "bfile"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["map", "closed-set-to-matching", "010"]), 2);
    assert_eq!(code(&["enumerate", "matching", "--k", "20", "--n", "20"]), 4);
    assert_eq!(code(&["enumerate", "chords", "--n", "40"]), 4);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.txt");
    assert_eq!(code(&["table", "a", "--max", "3", "--out", missing.to_str().unwrap()]), 3);
}
