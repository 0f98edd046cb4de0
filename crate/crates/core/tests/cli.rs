use std::io::Write;
use std::process::{Command, Output, Stdio};

fn truncw(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_truncw"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("TRUNCW_MAX_DIM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary starts");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn cg_table_json_is_stable() {
    let a = truncw(&["--N", "2", "--p", "3", "cg-table"], None, &[]);
    let b = truncw(&["--N", "2", "--p", "3", "cg-table"], None, &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema"], "truncw/1");
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["value"].as_str().unwrap().contains('/')));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(truncw(&["--p", "0", "cg-table"], None, &[]).status.code(), Some(2));
    assert_eq!(truncw(&["verify", "--suite", "nope"], None, &[]).status.code(), Some(2));
    assert_eq!(truncw(&["--N", "3", "--p", "5", "cg-table"], None, &[]).status.code(), Some(2));
    assert_eq!(truncw(&["--N", "3", "--p", "5", "cg-table"], None, &[("TRUNCW_MAX_DIM", "15")]).status.code(), Some(0));
    assert_eq!(truncw(&["classify"], Some("{not json"), &[]).status.code(), Some(2));
}

#[test]
fn verification_failure_exits_1() {
    let o = truncw(&["verify", "--suite", "coproduct"], None, &[]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    assert!(v["first_failure"]["name"].is_string());
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "--suite", "identify", "--N", "2", "--p", "2"][..],
        &["verify", "--suite", "all", "--N", "1", "--p", "1"][..],
        &["verify", "--suite", "rtt", "--N", "2", "--factors", "1,0;1,0"][..],
    ] {
        let o = truncw(args, None, &[]);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn classify_examples() {
    let one = truncw(&["--N", "2", "--p", "1", "classify"], Some(r#"{"P": [[0, 1]], "rho": [1]}"#), &[]);
    let v = json(&one);
    assert_eq!(v["accepted"], true);
    assert_eq!(v["plan"]["factors"].as_array().unwrap().len(), 1);
    let two = truncw(&["--N", "2", "--p", "1", "classify"], Some(r#"{"P": [[0, 0, 1]]}"#), &[]);
    assert_eq!(two.status.code(), Some(0));
    assert_eq!(json(&two)["reason"], "degree 2 > p=1");
    let triv = truncw(&["--N", "2", "--p", "1", "classify"], Some(r#"{"P": [[1]], "rho": [1]}"#), &[]);
    assert_eq!(json(&triv)["plan"]["factors"], serde_json::json!([]));
}

#[test]
fn qdet_of_defining_module() {
    // qdet = 1 + 1/u on the defining gl(2) module, listed up to d_2
    let o = truncw(&["--N", "2", "qdet", "--factors", "1,0"], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["d"], serde_json::json!(["1/1", "1/1", "0/1"]));
    let exact = truncw(&["--N", "2", "--p", "1", "classify"], Some(r#"{"P": [[0, 1]], "rho": [1, 1, 0]}"#), &[]);
    assert_eq!(json(&exact)["plan"]["center_matched"], true);
}

#[test]
fn qdet_output_feeds_classify() {
    let q = json(&truncw(&["--N", "2", "qdet", "--factors", "3/2,1/2"], None, &[]));
    // the d list is a truncated expansion; the exact series is num/den
    let rho = serde_json::json!({"num": q["numerator"], "den": q["denominator"]});
    let input = serde_json::json!({"P": [["1/2", 1]], "rho": rho}).to_string();
    let v = json(&truncw(&["--N", "2", "--p", "1", "classify"], Some(&input), &[]));
    assert_eq!(v["plan"]["center_matched"], true);
    assert_eq!(v["plan"]["factors"], serde_json::json!([["3/2", "1/2"]]));
}

#[test]
fn center_output() {
    let v = json(&truncw(&["--N", "2", "--p", "2", "center"], None, &[]));
    assert_eq!(v["casimirs"].as_array().unwrap().len(), 4);
    assert_eq!(v["tower"][1]["surviving"], serde_json::json!([2, 3, 4]));
}
