use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lmsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmsg"))
        .args(args)
        .output()
        .expect("running lmsg")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lmsg-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analyze_fig8_g1() {
    let v = json(&lmsg(&["analyze", "--fixture", "fig8_G1"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["predicates"]["very_well_covered"], true);
    assert_eq!(v["predicates"]["greedoid_oracle"], true);
    assert_eq!(v["predicates"]["greedoid_fast"], true);
    let m: Vec<&str> = v["certificates"]["unique_perfect_matching"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap())
        .collect();
    assert_eq!(m, ["r1-r2", "p1-p2", "p3-q3", "q1-q2"]);
}

#[test]
fn analyze_fig10_is_not_a_greedoid() {
    let v = json(&lmsg(&["analyze", "--fixture", "fig10_G"]));
    assert_eq!(v["predicates"]["very_well_covered"], false);
    assert_eq!(v["predicates"]["unique_perfect_matching"], true);
    assert_eq!(v["predicates"]["greedoid_oracle"], false);
    assert_eq!(v["predicates"]["greedoid_fast"], Value::Null);
}

#[test]
fn analyze_reads_files_and_stdin() {
    let dir = scratch("k1");
    let path = dir.join("k1.txt");
    std::fs::write(&path, "1\n").unwrap();
    let v = json(&lmsg(&["analyze", path.to_str().unwrap()]));
    assert_eq!(v["graph"]["n"], 1);
    assert_eq!(v["predicates"]["alpha"], 1);
    assert_eq!(v["predicates"]["very_well_covered"], false);
    assert_eq!(v["predicates"]["greedoid_oracle"], true);

    let mut child = Command::new(env!("CARGO_BIN_EXE_lmsg"))
        .args(["analyze", "-", "--format", "text"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"2\n0 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("unique perfect matching  yes"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = scratch("bad");
    let path = dir.join("bad.txt");
    std::fs::write(&path, "3\n0 1\n1 x\n").unwrap();
    let out = lmsg(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn unknown_fixture_fails() {
    let out = lmsg(&["analyze", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_over_fixtures_reports_verdicts() {
    let v = json(&lmsg(&[
        "verify", "--theorem", "th8", "--fixture", "fig8_G1", "--fixture", "fig8_G2",
        "--fixture", "fig8_G3",
    ]));
    assert_eq!(v["total_violations"], 0);
    let verdicts: Vec<(&str, &str)> = v["theorems"][0]["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| (d["graph"].as_str().unwrap(), d["outcome"].as_str().unwrap()))
        .collect();
    assert_eq!(
        verdicts,
        [
            ("fig8_G1", "holds (true)"),
            ("fig8_G2", "holds (false)"),
            ("fig8_G3", "holds (false)"),
        ]
    );
}

#[test]
fn verify_rejects_unknown_theorem() {
    let out = lmsg(&["verify", "--theorem", "th99"]);
    assert!(!out.status.success());
}

#[test]
fn generate_connected_counts() {
    let dir = scratch("gen");
    for (min_n, expected) in [("1", 31usize), ("2", 30)] {
        let path = dir.join(format!("connected-{min_n}.txt"));
        let out = lmsg(&[
            "generate", "--source", "connected", "--min-n", min_n, "--max-n", "5", "--output",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stderr).contains(&format!("{expected} graphs written")));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(lmsg_core::io::parse_many(&text).unwrap().len(), expected);
    }
}

#[test]
fn generate_random_is_reproducible() {
    let args = ["generate", "--source", "random-vwc", "--n", "10", "--count", "5", "--seed", "7"];
    let a = lmsg(&args);
    let b = lmsg(&args);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let other = lmsg(&["generate", "--source", "random-vwc", "--n", "10", "--count", "5", "--seed", "8"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn generate_corona_family_into_directory() {
    let dir = scratch("coronas");
    let out = lmsg(&[
        "generate", "--source", "corona-k1", "--family", "path", "--max-n", "6", "--dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let mut files = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let g = lmsg_core::io::parse_edge_list(&text).unwrap();
        assert!(lmsg_core::classifiers::is_very_well_covered(&g));
        files += 1;
    }
    assert_eq!(files, 6);
}
