//! End-to-end tests against the built binary: output formats, matrix
//! input parsing and the exit-code contract (0 ok, 1 verification
//! failure, 2 usage, 3 internal).

use std::process::{Command, Output};

fn qrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_plain_and_json() {
    let out = qrank(&["count", "--n", "2", "--r", "1", "--k", "1", "--q", "2", "--alpha", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5");

    let out = qrank(&[
        "count", "--n", "2", "--r", "1", "--k", "1", "--q", "2", "--alpha", "nonzero", "--json",
    ]);
    assert!(out.status.success());
    let line = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(parsed["result"], "4");
    assert_eq!(parsed["method"], "closed_form");
    assert_eq!(parsed["query"]["p"], 2);
    // counts are strings, never JSON numbers
    assert!(parsed["result"].is_string());
}

#[test]
fn count_json_round_trips_byte_identical() {
    let out = qrank(&[
        "count", "--n", "3", "--r", "2", "--k", "1", "--q", "5", "--alpha", "0", "--json",
    ]);
    let line = stdout(&out);
    let rec: qrank::record::OutputRecord = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(rec.to_json(), line.trim());
}

#[test]
fn count_methods_agree() {
    for method in ["closed", "rec"] {
        let out = qrank(&[
            "count", "--n", "4", "--r", "2", "--k", "3", "--q", "3", "--alpha", "1", "--method",
            method,
        ]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), "270621", "method={method}");
    }
}

#[test]
fn count_zero_rank_trivial() {
    let out = qrank(&["count", "--n", "3", "--r", "0", "--k", "2", "--q", "5", "--alpha", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn count_accepts_p_m_form() {
    let out = qrank(&[
        "count", "--n", "2", "--r", "1", "--k", "1", "--p", "2", "--m", "2", "--alpha", "0",
    ]);
    assert!(out.status.success());
    let with_q = qrank(&["count", "--n", "2", "--r", "1", "--k", "1", "--q", "4", "--alpha", "0"]);
    assert_eq!(stdout(&out), stdout(&with_q));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["count", "--n", "2", "--r", "3", "--k", "1", "--q", "2", "--alpha", "0"],
        vec!["count", "--n", "2", "--r", "1", "--k", "1", "--q", "6", "--alpha", "0"],
        vec!["count", "--n", "2", "--r", "1", "--k", "1", "--q", "2", "--alpha", "x"],
        vec!["count", "--n", "2", "--r", "1", "--k", "1", "--alpha", "0"],
        vec!["table", "--n", "1", "--k", "2", "--q", "2"],
        vec!["zcount", "--matrix", "2,1;0 1;0", "--r", "1", "--alpha", "0"],
        vec!["zcount", "--matrix", "2,1;0 1 1;1 0 1", "--r", "1", "--alpha", "0"],
        vec!["verify", "--suite", "oracle", "--max-n", "9", "--q-list", "2"],
        vec!["verify", "--suite", "oracle", "--q-list", "6", "--max-n", "2"],
    ] {
        let out = qrank(&args);
        assert_eq!(out.status.code(), Some(2), "args={args:?}");
    }
}

#[test]
fn table_csv_matches_spec_rows() {
    let out = qrank(&["table", "--n", "1", "--k", "1", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "r,f0,f1,g,a\n0,1,0,1,1\n1,0,1,-1,2\n");

    let out = qrank(&["table", "--n", "0", "--k", "0", "--q", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "r,f0,f1,g,a\n0,1,0,1,1\n");
}

#[test]
fn table_json_format() {
    let out = qrank(&["table", "--n", "2", "--k", "1", "--q", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["f0"], "2");
    assert_eq!(rows[2]["g"], "-2");
}

#[test]
fn zcount_dual_method_agreement() {
    let out = qrank(&["zcount", "--matrix", "2,1;0 1;0 0", "--r", "1", "--alpha", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("closed_form 4"), "{text}");
    assert!(text.contains("oracle 4"), "{text}");
}

#[test]
fn zcount_zero_matrix() {
    let out = qrank(&["zcount", "--matrix", "2,1;0 0;0 0", "--r", "1", "--alpha", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("closed_form 9"), "{text}");
}

#[test]
fn zcount_from_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("qrank_zcount_matrix.txt");
    std::fs::write(&path, "3,1;1 0;0 1\n").unwrap();
    let out = qrank(&[
        "zcount", "--matrix", path.to_str().unwrap(), "--r", "2", "--alpha", "0",
        "--method", "closed",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "18");
}

#[test]
fn verify_identities_passes() {
    let out = qrank(&["verify", "--suite", "identities", "--max-n", "4", "--q-list", "2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS q_binomial_theorem"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_oracle_passes_with_workers() {
    let out = qrank(&[
        "verify", "--suite", "oracle", "--max-n", "2", "--q-list", "2,3", "--workers", "4",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS enumeration_matches_closed_forms"));
}

#[test]
fn gf_info_prints_modulus_and_elements() {
    let out = qrank(&["gf-info", "--q", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("GF(9) = GF(3^2)"));
    assert!(text.contains("modulus: t^2 + 1"));
    assert!(text.contains("  3: t"));
}
