use std::process::Command;

use proptest::prelude::*;
use trinomial_cli::commands::{build_sweep, SweepOptions};
use trinomial_cli::parse_polynomial;
use trinomial_cli::report::{Disagreement, Family};
use trinomial_cli::SweepReport;
use trinomial_core::IntPoly;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_trinomial"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn classify_reports_the_corrected_factor() {
    let (out, _, code) = run(&[
        "classify", "--n", "50", "--m", "4", "--eps1", "-1", "--eps2", "-1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("status: Reducible"), "{out}");
    assert!(out.contains("cyclotomic factor: x^4 - x^2 + 1"), "{out}");
}

#[test]
fn factor_prints_both_factors_in_order() {
    let (out, _, code) = run(&["factor", "x^5 - x^4 + 9"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[2], "(x^2 - 3x + 3)  [non-reciprocal]");
    assert_eq!(lines[3], "(x^3 + 2x^2 + 3x + 3)  [non-reciprocal]");
}

#[test]
fn discriminant_of_the_cubic() {
    // -4a^3 - 27b^2 at a = 1, b = 4
    let expected = -4 - 27 * 16;
    let (out, _, code) = run(&[
        "discriminant",
        "--n",
        "3",
        "--m",
        "1",
        "--a",
        "1",
        "--b",
        "4",
        "--format",
        "json-lines",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["closed_form"].to_string(), expected.to_string());
    assert_eq!(v["resultant"].to_string(), expected.to_string());
    assert_eq!(v["agreement"], true);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(run(&["factor", "x^"]).2, 2);
    assert_eq!(
        run(&["classify", "--n", "3", "--m", "3", "--eps1", "1", "--eps2", "1"]).2,
        2
    );
    assert_eq!(
        run(&[
            "classify-pk",
            "--n",
            "5",
            "--m",
            "2",
            "--eps1",
            "1",
            "--eps2",
            "1",
            "--p",
            "6",
            "--k",
            "2"
        ])
        .2,
        2
    );
    assert_eq!(
        run(&["sweep", "--family", "pk", "--p", "9", "--max-n", "4"]).2,
        2
    );
    assert_eq!(run(&["bogus"]).2, 2);
}

#[test]
fn identities_hold() {
    let (out, _, code) = run(&[
        "verify-identities",
        "--max-n",
        "24",
        "--p",
        "7",
        "--max-product",
        "60",
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with(" 0 failed")), "{out}");
}

#[test]
fn sweep_file_round_trips_and_is_job_independent() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.jsonl");
    let two = dir.path().join("two.jsonl");
    for (path, jobs) in [(&one, "1"), (&two, "3")] {
        let args = [
            "sweep",
            "--max-n",
            "12",
            "--format",
            "json-lines",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ];
        assert_eq!(run(&args).2, 0);
    }
    let a = std::fs::read_to_string(&one).unwrap();
    assert_eq!(a, std::fs::read_to_string(&two).unwrap());
    let report = SweepReport::from_json_lines(&a).unwrap();
    assert_eq!(report.to_json_lines(), a);
    // every instance once, in (n, m, signs) order
    let expected: usize = (2..=12).map(|n| 4 * (n - 1)).sum();
    assert_eq!(report.records.len(), expected);
    let keys: Vec<_> = report
        .records
        .iter()
        .map(|r| (r.spec.n, r.spec.m, r.spec.eps1, r.spec.eps2))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(keys, sorted);
    assert_eq!(report.summary, SweepReport::summarize(&report.records));
}

#[test]
fn pk_sweep_summary() {
    let report = build_sweep(&SweepOptions {
        family: Family::PrimePower,
        max_n: 9,
        primes: vec![2],
        exponents: vec![2],
    })
    .unwrap();
    assert_eq!(
        report.summary.mismatches + report.summary.structure_violations,
        0
    );
    assert_eq!(report.summary.max_factor_count_per_k.get(&2), Some(&2));
    for r in &report.records {
        assert!(r.agreement || !r.detail.is_empty());
        assert_eq!(r.disagreement.is_some(), !r.agreement);
        assert!(!matches!(r.disagreement, Some(Disagreement::Mismatch)));
    }
}

#[test]
fn malformed_reports_are_rejected() {
    assert!(SweepReport::from_json_lines("").is_err());
    assert!(SweepReport::from_json_lines(r#"{"kind":"summary","instances":0,"agreements":0,"mismatches":0,"structure_violations":0,"reducible":0,"max_factor_count_per_k":{}}"#).is_err());
}

proptest! {
    #[test]
    fn display_parses_back(coeffs in proptest::collection::vec(-1000i64..1000, 0..12)) {
        let f = IntPoly::from_slice(&coeffs);
        prop_assert_eq!(parse_polynomial(&f.to_string()).unwrap(), f);
    }
}
