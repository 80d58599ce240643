use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenworks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn expand_writes_csv_with_constant_term() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e20.csv");
    let out = run(&[
        "expand",
        "--family",
        "eis",
        "--weight",
        "2",
        "--order",
        "8",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,m,n,coeff"));
    assert!(text.lines().any(|l| l == "1,0,0,1/720"));
}

#[test]
fn expand_json_envelope() {
    let out = run(&[
        "expand",
        "--weight",
        "4",
        "--component",
        "2",
        "2",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "eisenworks/1");
    assert_eq!(v["weights"], serde_json::json!([2, 2]));
    assert_eq!(v["truncation"], 3);
    assert_eq!(v["pole_order"], 4);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.json")))
        .collect();
    for (i, p) in paths.iter().enumerate() {
        let threads = if i == 0 { "1" } else { "3" };
        let out = run(&[
            "--threads",
            threads,
            "expand",
            "--weight",
            "6",
            "--order",
            "6",
            "--format",
            "json",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&paths[0]).unwrap(),
        std::fs::read(&paths[1]).unwrap()
    );
}

#[test]
fn lie_verifies_pollack_relation() {
    let out = run(&["lie", "--verify", "pollack"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["relation"], serde_json::json!([1, -3]));
    assert_eq!(v["weightpair"], serde_json::json!([10, 4, 8, 6]));
    assert_eq!(v["verified"], true);
}

#[test]
fn lie_dimension_table_matches_series() {
    let out = run(&["lie", "--table", "--maxlen", "2", "--window", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["poincare_matches"], true);
}

#[test]
fn pls_reports_both_conventions() {
    let verbatim = run(&["pls", "--check-bracket", "4", "6"]);
    assert_eq!(verbatim.status.code(), Some(1));
    assert_eq!(json(&verbatim)["passes"], false);
    let leading = run(&[
        "pls",
        "--check-bracket",
        "4",
        "6",
        "--convention",
        "leading-b",
    ]);
    assert_eq!(leading.status.code(), Some(0));
    assert_eq!(json(&leading)["passes"], true);
}

#[test]
fn iterint_reports_identities() {
    let out = run(&[
        "iterint",
        "--maxlen",
        "2",
        "--maxweight",
        "6",
        "--order",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"]["base_point"], true);
}

#[test]
fn iterint_length_one_scalar() {
    let out = run(&["iterint", "--jeqv1", "--weight", "2", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["proportional"], true);
    assert_eq!(
        v["scalar"],
        serde_json::json!([{ "coeff": "-2", "monomial": [] }])
    );
}

#[test]
fn lfun_matches_closed_form() {
    let out = run(&[
        "lfun",
        "--family",
        "eis",
        "--weights",
        "2",
        "0",
        "--s",
        "8",
        "--terms",
        "100000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["value", "tail_bound", "reference", "discrepancy"] {
        assert!(v[key].is_number(), "{key}");
    }
    assert!(v["discrepancy"].as_f64().unwrap() < 1e-6);
}

#[test]
fn invalid_configurations_exit_with_two() {
    let cases: [&[&str]; 5] = [
        &["expand", "--weight", "3"],
        &["expand", "--weight", "2", "--order", "1000"],
        &["lfun", "--weights", "2", "0", "--s", "3"],
        &["--threads", "0", "lie", "--verify", "pollack"],
        &["selftest", "--criteria", "16"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(run(&["expand"]).status.code(), Some(2));
}

#[test]
fn selftest_manifest() {
    let args = [
        "selftest",
        "--criteria",
        "1,13",
        "--cases",
        "20",
        "--seed",
        "7",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "eisenworks/1");
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    assert_eq!(v["properties"].as_array().unwrap().len(), 5);
    assert_eq!(run(&args).stdout, out.stdout);
}

#[test]
fn selftest_fails_on_a_failing_criterion() {
    let out = run(&[
        "selftest",
        "--criteria",
        "9",
        "--order",
        "4",
        "--cases",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}
