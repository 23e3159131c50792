use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prelie-operads"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_listing_and_count() {
    assert_eq!(
        stdout(&[
            "enumerate",
            "--family",
            "unlabeled",
            "--size",
            "4",
            "--count-only"
        ])
        .trim(),
        "4"
    );
    let planar = stdout(&["enumerate", "--family", "planar-binary", "--size", "4"]);
    assert_eq!(planar.lines().count(), 5);
    assert!(planar.lines().any(|l| l == "g(g(1,2),g(3,4))"));
    assert_eq!(
        stdout(&["enumerate", "--family", "labeled", "--size", "1"]).trim(),
        "1"
    );
    assert_eq!(
        stdout(&[
            "enumerate",
            "--family",
            "labeled",
            "--size",
            "4",
            "--count-only"
        ])
        .trim(),
        "64"
    );
}

#[test]
fn enumerate_refuses_oversized_requests() {
    let out = run(&["enumerate", "--family", "labeled", "--size", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = run(&["enumerate", "--family", "unlabeled", "--size", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_examples() {
    assert_eq!(
        stdout(&["eval", "--operad", "prelie", "id <| (id, id)"]).trim(),
        "0"
    );
    assert_eq!(
        stdout(&["eval", "--operad", "mag2", "g <| id"]).trim(),
        "2*g"
    );
    assert_eq!(
        stdout(&["eval", "--operad", "mag2", "g o_1 g"]).trim(),
        "g(g(1,2),3)"
    );
    assert_eq!(
        stdout(&["eval", "--operad", "freeprelie", "tree(()) |> tree()"]).trim(),
        "(()())"
    );
    assert_eq!(
        run(&["eval", "--operad", "nap", "1(2) |> 1(2)"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn eval_errors_exit_with_two() {
    let out = run(&["eval", "--operad", "mag2", "g <| (g,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    let out = run(&["eval", "--operad", "mag2", "g o_3 g"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "--operad", "nosuch", "id"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_passes_and_reports_json() {
    for args in [
        [
            "check",
            "--operad",
            "prelie",
            "--law",
            "insertion-vanish",
            "--max-arity",
            "2",
        ],
        [
            "check",
            "--operad",
            "mag2",
            "--law",
            "prelie",
            "--max-leaves",
            "3",
        ],
        [
            "check",
            "--operad",
            "nsassoc",
            "--law",
            "unit",
            "--max-arity",
            "5",
        ],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
    }
    let text = stdout(&[
        "check",
        "--operad",
        "nap",
        "--law",
        "parallel",
        "--max-arity",
        "3",
        "--json",
    ]);
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["instance"], "nap");
    assert_eq!(report["law"], "parallel");
    assert!(report["casesChecked"].as_u64().unwrap() > 0);
    assert_eq!(report["failures"], Value::Array(vec![]));
    assert_eq!(report["bounds"]["maxArity"], 3);
    assert!(report["wallTimeMs"].is_u64());
}

#[test]
fn check_rejects_bad_requests() {
    let out = run(&["check", "--operad", "mag2", "--law", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "--operad", "mag2", "--law", "coinvariant-welldef"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "check",
        "--operad",
        "prelie",
        "--law",
        "unit",
        "--max-arity",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theorem_json() {
    let text = stdout(&["theorem", "--operad", "mag2", "--json"]);
    let value: Value = serde_json::from_str(&text).unwrap();
    let rendered = value.to_string();
    assert!(rendered.contains("g <| (g, g, g)"));
    assert!(rendered.contains("(()()())"));
}

#[test]
fn report_is_deterministic() {
    let strip = |text: String| -> Value {
        let mut v: Value = serde_json::from_str(&text).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("wallTimeMs");
        }
        v
    };
    let args = [
        "report",
        "--operad",
        "nsassoc",
        "--operad",
        "nap",
        "--max-arity",
        "2",
        "--json",
    ];
    let first = strip(stdout(&args));
    let second = strip(stdout(&args));
    assert_eq!(first, second);
    let reports = first.as_array().unwrap();
    assert!(reports.iter().any(|r| r["law"] == "equivariance"));
    assert!(reports
        .iter()
        .all(|r| r["failures"].as_array().unwrap().is_empty()));
}
