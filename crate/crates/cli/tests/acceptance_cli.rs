//! CLI acceptance: deterministic reports and the exit-code contract.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qc-cartan"))
}

#[test]
fn criterion_10_deterministic_reports() {
    let run = || {
        let out = bin()
            .args(["analyze", "--n", "2", "--format", "json", "--seed", "7"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "analyze must pass");
        out.stdout
    };
    let first = run();
    let second = run();
    let ok = first == second && !first.is_empty();
    println!(
        "ACCEPTANCE 10 deterministic JSON reports: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "two identical runs must produce byte-identical reports");

    let parsed: serde_json::Value = serde_json::from_slice(&first).expect("valid JSON");
    assert_eq!(parsed["schema"], "qc-cartan/1");
    assert_eq!(parsed["summary"]["fail"], 0);
}

#[test]
fn analyze_n1_json_golden_values() {
    let out = bin()
        .args(["analyze", "--n", "1", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let find = |id: &str| {
        checks
            .iter()
            .find(|c| c["id"] == id)
            .unwrap_or_else(|| panic!("missing check {id}"))
    };
    let counts = find("analyze:n=1:counts");
    assert_eq!(counts["witness"]["d1"], 21);
    assert_eq!(counts["witness"]["d2"], 35);
    assert_eq!(counts["witness"]["D"], 112);
    let chars = find("analyze:n=1:characters");
    let vseq: Vec<u64> = chars["witness"]["v"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(&vseq[..5], &[0, 10, 12, 9, 4]);
    assert!(vseq[5..].iter().all(|&x| x == 0));
    let inv = find("analyze:n=1:involution");
    assert_eq!(inv["witness"]["involutive"], true);
    assert_eq!(inv["witness"]["D_nullity"], 112);
    assert_eq!(inv["status"], "pass");
}

#[test]
fn exit_code_contract() {
    // 0 on success
    let ok = bin()
        .args(["verify", "counts", "--n", "1..4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    // 2 on usage/config errors
    let usage = bin().args(["analyze", "--n", "0"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let usage2 = bin().args(["analyze", "--n", "5..2"]).output().unwrap();
    assert_eq!(usage2.status.code(), Some(2));
    let usage3 = bin().args(["analyze"]).output().unwrap();
    assert_eq!(usage3.status.code(), Some(2));
}

#[test]
fn verify_subcommands_pass() {
    for args in [
        vec!["verify", "circulant", "--n", "1..30"],
        vec!["verify", "dsquared", "--n", "1"],
        vec!["verify", "shift", "--n", "1", "--seed", "42"],
        vec!["verify", "bianchi", "--n", "1"],
        vec!["verify", "counts", "--n", "1..6"],
        vec!["dump", "--n", "1"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn out_flag_writes_report() {
    let dir = std::env::temp_dir().join("qc-cartan-test-out");
    let _ = std::fs::create_dir_all(&dir);
    let path = dir.join("report.json");
    let out = bin()
        .args([
            "verify",
            "counts",
            "--n",
            "1",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.contains("\"schema\": \"qc-cartan/1\""));
    let _ = std::fs::remove_file(&path);
}
