use std::process::{Command, Output};

use serde_json::Value;

fn uqsl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqsl2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_reports(args: &[&str]) -> (i32, Vec<Value>) {
    let o = uqsl2(args);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    (o.status.code().unwrap(), v.as_array().unwrap().clone())
}

fn without_timing(mut reports: Vec<Value>) -> Vec<Value> {
    for r in &mut reports {
        r["millis"] = Value::from(0);
    }
    reports
}

#[test]
fn show_examples() {
    let o = uqsl2(&["show", "--expr", "braided_antipode(E)", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-q^2 E");

    let o = uqsl2(&["show", "--expr", "casimir", "--format", "latex"]);
    assert_eq!(stdout(&o).trim(), r"FE + \frac{q K^{-1} + q^{3} K}{q^{4} - 2q^{2} + 1}");

    let o = uqsl2(&["show", "--expr", "0", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), "[]");

    let o = uqsl2(&["show", "--expr", "braided_coproduct(E)", "--order", "2", "--format", "json"]);
    let terms: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(terms.as_array().unwrap().len(), 4);
}

#[test]
fn show_reports_parse_errors() {
    let o = uqsl2(&["show", "--expr", "E * (F +", "--format", "text"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("parse error at position 8"), "{err}");
}

#[test]
fn verify_single_checks() {
    let o = uqsl2(&["verify", "--check", "bc-E", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS  bc-E"));

    let (code, reports) = json_reports(&["verify", "--check", "antipode-KKinv", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(reports[0]["status"], "pass");
    assert_eq!(reports[0]["order"], 8);
    assert!(reports[0]["witness"].is_null());
    assert!(reports[0]["millis"].is_u64());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify", "--check", "no-such-check"],
        vec!["verify", "--check", "cas-antipode", "--order", "1"],
        vec!["verify", "--check", "efn", "--eval", "q=-1"],
        vec!["verify", "--check", "efn", "--eval", "2"],
        vec!["verify", "--check", "efn", "--corpus", "a<=2"],
        vec!["frobnicate"],
    ] {
        assert_eq!(uqsl2(&args).status.code(), Some(2), "{args:?}");
    }
    let o = uqsl2(&["verify", "--check", "badj-equals-adj", "--order", "3"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains(">= 8"));
}

#[test]
fn order_zero_runs_finite_checks_only() {
    let (code, reports) = json_reports(&["verify", "--check", "all", "--order", "0", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(reports.len(), 19);
    let status = |name: &str| reports.iter().find(|r| r["name"] == name).unwrap()["status"].clone();
    for finite in ["efn", "adjoint-triple", "hopf-axioms", "delta-hom", "ba-E", "bc-Kinv", "ba-Kinv"] {
        assert_eq!(status(finite), "pass", "{finite}");
    }
    for needs_more in ["bc-E", "antipode-KKinv", "badj-stabilize", "braided-S-product"] {
        assert_eq!(status(needs_more), "error", "{needs_more}");
    }
    let err = reports.iter().find(|r| r["name"] == "bc-E").unwrap()["error"].as_str().unwrap().to_string();
    assert!(err.contains(">= 1"), "{err}");
}

#[test]
fn reports_are_deterministic_and_stable_in_order() {
    let corpus = ["--corpus", "a,c<=1,b<=0"];
    let run = |n: &str| {
        let mut args = vec!["verify", "--check", "all", "--order", n, "--format", "json"];
        args.extend(corpus);
        without_timing(json_reports(&args).1)
    };
    let first = run("6");
    assert_eq!(first, run("6"));
    let names: Vec<_> = first.iter().map(|r| r["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names.first().map(String::as_str), Some("bc-E"));
    assert_eq!(names.last().map(String::as_str), Some("braided-S-product"));
    assert!(first.iter().all(|r| r["status"] == "pass"));
    let next: Vec<_> = run("7").iter().map(|r| r["status"].clone()).collect();
    assert_eq!(first.iter().map(|r| r["status"].clone()).collect::<Vec<_>>(), next);
}

#[test]
fn numeric_specialization() {
    let o = uqsl2(&["verify", "--check", "bc-Kinv", "--order", "6", "--eval", "q=2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = uqsl2(&["verify", "--check", "cas-antipode", "--order", "8", "--eval", "q=3/2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = uqsl2(&["verify", "--check", "bc-Kinv", "--eval", "q=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("not an admissible"));
}
