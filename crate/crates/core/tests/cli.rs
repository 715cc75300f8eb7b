//! End-to-end tests of the `bellcomp` binary: golden outputs, formats, and
//! exit codes (0 success / all checks pass, 1 check failure, 2 usage or
//! precondition error).

use std::process::{Command, Output};

fn bellcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellcomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = bellcomp(args);
    assert!(
        out.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn exit_code(args: &[&str]) -> i32 {
    bellcomp(args).status.code().expect("exit code")
}

#[test]
fn bell_text_goldens() {
    assert_eq!(stdout_of(&["bell", "4", "2", "--strategy", "direct"]), "3*x2^2 + 4*x1*x3\n");
    assert_eq!(
        stdout_of(&["bell", "4", "2", "--strategy", "direct", "--eval", "1,1,1"]),
        "7\n"
    );
    assert_eq!(stdout_of(&["bell", "2", "3", "--strategy", "direct"]), "0\n");
    assert_eq!(stdout_of(&["bell", "0", "0"]), "1\n");
    assert_eq!(stdout_of(&["bell", "3", "1"]), "1*x3\n");
}

#[test]
fn every_strategy_prints_the_same_polynomial() {
    let reference = stdout_of(&["bell", "5", "3", "--strategy", "direct"]);
    for strategy in ["compositions", "id1", "id2", "id3", "id4", "id5", "id6"] {
        assert_eq!(
            stdout_of(&["bell", "5", "3", "--strategy", strategy]),
            reference,
            "strategy {strategy}"
        );
    }
    // And under every split of the two-way identity.
    for split in ["0", "1", "2", "3"] {
        assert_eq!(
            stdout_of(&["bell", "5", "3", "--strategy", "id2", "--split", split]),
            reference
        );
    }
}

#[test]
fn comps_goldens() {
    assert_eq!(
        stdout_of(&["comps", "4", "3", "-w", "0=2", "-w", "1=1", "-w", "2=1"]),
        "9\n"
    );
    assert_eq!(
        stdout_of(&["comps", "3", "2", "-w", "1=1", "-w", "2=1", "--list"]),
        "(1,2)\n(2,1)\n"
    );
    assert_eq!(stdout_of(&["comps", "0", "0"]), "1\n");
    // Rational weights and every strategy.
    for strategy in ["enumerate", "partitions", "convolution", "weighted-conv", "part-removal"] {
        assert_eq!(
            stdout_of(&["comps", "4", "2", "-w", "1=1/2", "-w", "3=2", "--strategy", strategy]),
            "2\n",
            "strategy {strategy}"
        );
    }
    assert_eq!(
        stdout_of(&["comps", "4", "2", "-w", "1=1/2", "-w", "3=2", "--strategy", "depril"]),
        "2\n"
    );
}

#[test]
fn json_and_csv_formats() {
    assert_eq!(
        stdout_of(&["bell", "4", "2", "--format", "json"]),
        "[{\"coeff\":\"3\",\"monomial\":{\"2\":2}},{\"coeff\":\"4\",\"monomial\":{\"1\":1,\"3\":1}}]\n"
    );
    assert_eq!(
        stdout_of(&["bell", "4", "2", "--format", "csv"]),
        "coeff,monomial\n3,x2^2\n4,x1*x3\n"
    );
    assert_eq!(
        stdout_of(&["bell", "4", "2", "--eval", "1,1,1", "--format", "json"]),
        "{\"value\":\"7\"}\n"
    );
    assert_eq!(
        stdout_of(&["comps", "4", "3", "-w", "0=2", "-w", "1=1", "-w", "2=1", "--format", "json"]),
        "{\"value\":\"9\"}\n"
    );
    assert_eq!(
        stdout_of(&["comps", "3", "2", "-w", "1=1", "-w", "2=1", "--list", "--format", "csv"]),
        "composition\n\"(1,2)\"\n\"(2,1)\"\n"
    );
    let listed = stdout_of(&["comps", "3", "2", "-w", "1=1", "-w", "2=1", "--list", "--format", "json"]);
    assert_eq!(listed, "{\"compositions\":[[1,2],[2,1]]}\n");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["bell", "9", "4", "--strategy", "compositions"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = ["comps", "8", "4", "-w", "0=1/3", "-w", "2=5", "--strategy", "partitions"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn verify_passes_and_reports() {
    let out = bellcomp(&["verify", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0), "trivial range passes");

    let json = stdout_of(&["verify", "--n-max", "10", "--suites", "all", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(report["range"], serde_json::json!([10, 10]));
    assert!(report["elapsed_ms"].is_number());
    let checks = report["checks"].as_array().expect("checks array");
    assert!(checks.len() > 500, "expected > 500 checks, got {}", checks.len());
    assert!(checks.iter().all(|c| c["pass"] == serde_json::json!(true)));

    let text = stdout_of(&["verify", "--n-max", "12", "--suites", "id3"]);
    assert!(text.trim_end().ends_with("PASS"), "got: {text}");

    // Single-suite runs accept every documented suite name.
    for suite in ["theorem1", "lemma2", "lemma3", "id1", "id2", "id4", "id5", "id6", "stirling", "stochastic"] {
        assert_eq!(exit_code(&["verify", "--n-max", "4", "--suites", suite]), 0, "suite {suite}");
    }
}

#[test]
fn verify_csv_has_the_expected_columns() {
    let csv = stdout_of(&["verify", "--n-max", "2", "--suites", "stirling", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("suite,name,n,k,pass,detail"));
    assert!(lines.next().unwrap().starts_with("stirling,"));
}

#[test]
fn bench_shape() {
    let csv = stdout_of(&["bench", "--n-max", "1", "--repetitions", "1"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "strategy,n,k,wall_time_ns,term_count");
    // Three default strategies, each on cells (0,0), (1,0), (1,1).
    assert_eq!(lines.len(), 1 + 3 * 3);
    for expected_prefix in ["direct,0,0,", "direct,1,0,", "direct,1,1,"] {
        assert!(lines.iter().any(|l| l.starts_with(expected_prefix)), "{expected_prefix}");
    }
    let json = stdout_of(&["bench", "--n-max", "1", "--repetitions", "1", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(rows.as_array().unwrap().len(), 9);
    assert_eq!(rows[0]["strategy"], serde_json::json!("direct"));
}

#[test]
fn usage_and_precondition_errors_exit_2() {
    assert_eq!(exit_code(&["bell", "4", "2", "--strategy", "id7"]), 2);
    assert_eq!(exit_code(&["bell", "3", "3", "--strategy", "id1"]), 2);
    assert_eq!(exit_code(&["bell", "4", "0", "--strategy", "id4"]), 2);
    assert_eq!(exit_code(&["bell", "4", "0", "--strategy", "id3"]), 2);
    assert_eq!(exit_code(&["bell", "4", "2", "--eval", "1,1"]), 2); // x3 missing
    assert_eq!(exit_code(&["bell", "4", "2", "--eval", "1,x,1"]), 2);
    assert_eq!(exit_code(&["comps", "3", "2", "-w", "0=2", "--strategy", "depril"]), 2);
    assert_eq!(exit_code(&["comps", "0", "3", "-w", "1=1", "--strategy", "weighted-conv"]), 2);
    assert_eq!(exit_code(&["comps", "3", "2", "-w", "badspec"]), 2);
    assert_eq!(exit_code(&["comps", "3", "2", "--strategy", "unknown"]), 2);
    assert_eq!(exit_code(&["verify", "--suites", "nonsense"]), 2);
    assert_eq!(exit_code(&["bench", "--strategies", "nonsense"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
}

#[test]
fn id1_at_the_base_case_is_rejected_on_the_cli_only() {
    // The library accepts n = k as the recursion anchor; the command line
    // surfaces the recurrence itself, which divides by n - k.
    assert_eq!(
        bellcomp::bell::identity1(3, 3).unwrap(),
        bellcomp::MultiPoly::indeterminate(1).pow(3)
    );
    assert_eq!(exit_code(&["bell", "3", "3", "--strategy", "id1"]), 2);
}
