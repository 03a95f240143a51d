//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

const FLAGMOD_VARS: &[&str] = &[
    "FLAGMOD_N",
    "FLAGMOD_K",
    "FLAGMOD_BIG_D",
    "FLAGMOD_BIG_N",
    "FLAGMOD_MAX",
    "FLAGMOD_SEED",
    "FLAGMOD_FORMAT",
];

fn flagmod(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_flagmod"));
    for var in FLAGMOD_VARS {
        cmd.env_remove(var);
    }
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    flagmod(args).output().expect("binary should spawn")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

#[test]
fn counts_weight_preserving_injections() {
    let out = run(&["homs", "--cat", "fi", "--n", "2", "--from", "2,0", "--to", "1,1", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "2");

    // Same query without --count lists both morphisms.
    let out = run(&["homs", "--cat", "fi", "--n", "2", "--from", "2,0", "--to", "1,1"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("total: 2"));

    // Bijections may raise weights but never lower them.
    let out = run(&["homs", "--cat", "fb", "--n", "2", "--from", "2,0", "--to", "1,1", "--count"]);
    assert_eq!(stdout_of(&out).trim(), "2");
    let out = run(&["homs", "--cat", "fb", "--n", "2", "--from", "1,1", "--to", "2,0", "--count"]);
    assert_eq!(stdout_of(&out).trim(), "0");
}

#[test]
fn zero_tuple_spelling_needs_arity() {
    let out = run(&["homs", "--cat", "fi", "--n", "2", "--from", "∅", "--to", "1,1", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "1");

    let out = run(&["homs", "--cat", "fi", "--from", "∅", "--to", "1,1", "--count"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn canonicalizes_ideal_sums() {
    let out = run(&["ideal", "sum", "[(1,3),(0,1)]"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "[(0,1)]");

    let out = run(&["ideal", "radical", "[(2,3),(1,2)]", "--n", "3"]);
    assert_eq!(stdout_of(&out).trim(), "[(1,1)]");

    let out = run(&["ideal", "contains", "[(1,2)]", "[(1,3)]"]);
    assert_eq!(stdout_of(&out).trim(), "true");
    let out = run(&["ideal", "contains", "[(1,3)]", "[(1,2)]"]);
    assert_eq!(stdout_of(&out).trim(), "false");
}

#[test]
fn reports_prime_chain_length() {
    let out = run(&["verify", "prime-chain", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("chain of length 4"), "missing length report: {text}");
    assert!(text.contains("result: PASS"));

    let out = run(&["ideal", "chain", "--n", "4"]);
    let text = stdout_of(&out);
    assert!(text.contains("chain length 4"));
    assert_eq!(text.matches('⊂').count(), 4, "five ideals joined by four inclusions");
}

#[test]
fn hilbert_class_series_of_first_basis_element() {
    let out = run(&["hilbert", "class", "--basis", "1", "--N", "4", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("(1/24)·t[1,1]^4"));
    assert!(text.contains("(1/2)·t[1,1]^2·t[1,2]"));
    assert!(text.contains("t[1,4]"));
}

#[test]
fn structured_output_is_schema_tagged_json() {
    let out = run(&[
        "verify",
        "ideal-lattice",
        "--n",
        "2",
        "--max",
        "2",
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    for line in stdout_of(&out).lines() {
        let record: serde_json::Value = serde_json::from_str(line).expect("each line is JSON");
        assert_eq!(record["schema"], "flagmod/1");
        assert!(record["kind"].is_string());
    }
}

#[test]
fn structured_output_is_deterministic() {
    let args = [
        "verify",
        "multiplicativity",
        "--n",
        "2",
        "--max",
        "2",
        "--seed",
        "7",
        "--format",
        "structured",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same config and seed must be byte-identical");
}

#[test]
fn environment_mirrors_the_flags() {
    let out = flagmod(&["homs", "--cat", "fi", "--from", "2,0", "--to", "1,1", "--count"])
        .env("FLAGMOD_N", "2")
        .env("FLAGMOD_FORMAT", "structured")
        .output()
        .expect("binary should spawn");
    assert!(out.status.success());
    let record: serde_json::Value =
        serde_json::from_str(stdout_of(&out).trim()).expect("structured record");
    assert_eq!(record["count"], 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        run(&["homs", "--cat", "fi", "--from", "2,x", "--to", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["homs", "--cat", "zz", "--n", "1", "--from", "1", "--to", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["ideal", "sum", "(1,3)"]).status.code(), Some(2));
    assert_eq!(run(&["--no-such-flag"]).status.code(), Some(2));
}

#[test]
fn verify_all_runs_every_suite() {
    let out = run(&["verify", "all", "--format", "structured"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let results: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .filter(|v: &serde_json::Value| v["kind"] == "suite-result")
        .collect();
    assert_eq!(results.len(), 12);
    assert!(results.iter().all(|r| r["pass"] == true));
}
