use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use wreath_core::suites::VerificationReport;

fn wreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .env_remove("WREATH_CONFIG")
        .env_remove("WREATH_CACHE_DIR")
        .env_remove("WREATH_SEED")
        .env_remove("WREATH_MODE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn version_names_table_format() {
    let out = wreath(&["--version"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("h-table format v"), "{}", text);
}

#[test]
fn partition_info_worked_example() {
    let out = wreath(&["partition", "info", "6,4,1", "--r", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["core"], serde_json::json!([3, 1, 1]));
    assert_eq!(v["quotient"], serde_json::json!([[1, 1], [], []]));
    assert_eq!(v["size"], 11);
    assert_eq!(v["transpose"], serde_json::json!([3, 2, 2, 2, 1, 1]));
    assert_eq!(v["hooks"][0], serde_json::json!([8, 6, 5, 4, 2, 1]));
    let charges: i64 = v["charges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_i64().unwrap())
        .sum();
    assert_eq!(charges, 0);
}

#[test]
fn partition_info_empty_and_malformed() {
    let out = wreath(&["partition", "info", "", "--r", "3"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["size"], 0);

    let out = wreath(&["partition", "info", "1,2", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn nekrasov_json_and_csv() {
    let out = wreath(&["nekrasov", "--r", "1", "--lam", "1", "--mu", ""]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["factors"], serde_json::json!([{ "uexp": 1, "qexp": 1, "texp": 1 }]));

    let out = wreath(&["nekrasov", "--r", "1", "--lam", "1", "--mu", "", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "uexp,qexp,texp,coefficient\n0,0,0,1\n1,1,1,-1\n");
}

#[test]
fn hpoly_classical_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "hpoly",
        "--r",
        "1",
        "--core",
        "",
        "--quot-size",
        "2",
        "--cache-dir",
        cache,
    ];
    let first = wreath(&args);
    assert!(first.status.success());
    assert!(String::from_utf8_lossy(&first.stderr).contains("computed"));
    let second = wreath(&args);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    assert_eq!(first.stdout, second.stdout);

    // H_(2) = s_2 + q s_11 and H_(1,1) = s_2 + t s_11
    let v = json(&first);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["terms"][1]["value"], "q");
    assert_eq!(entries[1]["terms"][1]["value"], "t");
}

#[test]
fn hpoly_quot_size_zero_is_one() {
    let out = wreath(&["hpoly", "--r", "3", "--core", "1", "--quot-size", "0"]);
    assert!(out.status.success());
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(
        entries[0]["terms"],
        serde_json::json!([{ "index": "[() () ()]", "value": "1" }])
    );

    let out = wreath(&["hpoly", "--r", "3", "--core", "2,1", "--quot-size", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_norm_points_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("norm.json");
    let out = wreath(&[
        "verify",
        "norm",
        "--r",
        "3",
        "--core",
        "",
        "--max-quot",
        "2",
        "--mode",
        "points",
        "--seed",
        "7",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.passed());
    assert_eq!(report.params["seed"], 7);
    // the report round-trips
    let again: VerificationReport = serde_json::from_value(report.to_json()).unwrap();
    assert_eq!(again.cases, report.cases);
}

#[test]
fn verify_no_modular_example() {
    let out = wreath(&[
        "verify",
        "no-modular",
        "--r",
        "3",
        "--core",
        "1",
        "--orderT",
        "2",
        "--qt-cap",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_failure_and_usage_codes() {
    let out = wreath(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // the per-base reading of the Pochhammer symbols does not give the theorem
    let out = wreath(&[
        "verify",
        "no-modular",
        "--r",
        "3",
        "--orderT",
        "2",
        "--mode",
        "exact",
        "--pochhammer",
        "per-base",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.cases.iter().any(|c| c.lhs.is_some() && c.rhs.is_some()));
}

#[test]
fn reports_are_byte_deterministic_without_timing() {
    let args = [
        "verify",
        "trace",
        "--r",
        "1",
        "--orderT",
        "2",
        "--cap-degree",
        "2",
        "--no-timing",
    ];
    assert_eq!(wreath(&args).stdout, wreath(&args).stdout);
}

#[test]
fn settings_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("wreath.toml");
    fs::write(&cfg, "seed = 9\n").unwrap();
    let seed = |extra: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_wreath"));
        cmd.args([
            "verify",
            "norm",
            "--r",
            "1",
            "--max-quot",
            "1",
            "--config",
            cfg.to_str().unwrap(),
        ])
        .args(extra);
        cmd.env_remove("WREATH_SEED");
        if let Some(s) = env {
            cmd.env("WREATH_SEED", s);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        json(&out)["params"]["seed"].as_u64().unwrap()
    };
    assert_eq!(seed(&[], None), 9);
    assert_eq!(seed(&[], Some("5")), 5);
    assert_eq!(seed(&["--seed", "3"], Some("5")), 3);

    fs::write(&cfg, "sed = 9\n").unwrap();
    let out = wreath(&["verify", "norm", "--r", "1", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn no_series_sides_agree_at_r1() {
    let out = wreath(&[
        "no-series",
        "--r",
        "1",
        "--orderT",
        "2",
        "--mode",
        "series",
        "--qt-cap",
        "6",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["sum"], v["product"]);
}
