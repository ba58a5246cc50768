//! End-to-end checks of the binary: JSON output shapes, exit-code families,
//! and seed determinism.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_steencalc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("STEENCALC_SEED").output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&output.stdout);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("bad JSON ({e}): {text}"))
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("steencalc-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn eval_total_on_preset() {
    let out = run(&["steenrod", "eval", "--variety", "P2", "--prime", "2", "--class", "h"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["h"], 1);
    assert_eq!(v["result"]["h^2"], 1);
}

#[test]
fn eval_on_variety_file() {
    let path = temp_file(
        "p2.json",
        r#"{
            "prime": 2,
            "dimension": 2,
            "generators": [{"name": "h", "codim": 1, "nilpotency": 3, "divisor": true}],
            "tangent_chern": "(1+h)^3"
        }"#,
    );
    let out = run(&["steenrod", "eval", "--variety", path.to_str().unwrap(), "--class", "h"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["h"], 1);
    assert_eq!(v["result"]["h^2"], 1);
}

#[test]
fn eval_graded_piece_and_homological() {
    let out = run(&[
        "steenrod", "eval", "--variety", "P3", "--prime", "3", "--class", "h", "--op", "coh-k",
        "--k", "1",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["h^3"], 1);

    let out = run(&[
        "steenrod", "eval", "--variety", "P2", "--prime", "2", "--class", "1", "--op",
        "hom-total",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    // (1+h)^{-3} = 1 + h over P^2 mod 2
    assert_eq!(v["result"]["1"], 1);
    assert_eq!(v["result"]["h"], 1);
    assert!(v["result"].get("h^2").is_none());

    // coh-k without --k is an input error
    let out = run(&[
        "steenrod", "eval", "--variety", "P3", "--prime", "3", "--class", "h", "--op", "coh-k",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_input_errors_exit_2() {
    // syntax error in the expression
    let out = run(&["steenrod", "eval", "--variety", "P2", "--prime", "2", "--class", "h +"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown generator
    let out = run(&["steenrod", "eval", "--variety", "P2", "--prime", "2", "--class", "z"]);
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = run(&["steenrod", "eval", "--variety", "/nonexistent.json", "--class", "h"]);
    assert_eq!(out.status.code(), Some(2));
    // preset without a prime
    let out = run(&["steenrod", "eval", "--variety", "P2", "--class", "h"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flags are a usage error
    let out = run(&["steenrod", "eval", "--nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_reports() {
    let out = run(&["steenrod", "verify", "--suite", "prx-divisibility", "--seed", "7"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "prx-divisibility");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["cases"].as_u64().unwrap() > 0);

    // unknown suite name is an input error
    let out = run(&["steenrod", "verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_pthpower_suite_passes() {
    let out = run(&["steenrod", "verify", "--suite", "pthpower", "--seed", "7"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "pthpower");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_is_deterministic_given_seed() {
    let strip_time = |v: &mut serde_json::Value| {
        v.as_object_mut().unwrap().remove("wall_ms");
    };
    let a = run(&["steenrod", "verify", "--suite", "fibers", "--seed", "42"]);
    let b = run(&["steenrod", "verify", "--suite", "fibers", "--seed", "42"]);
    let mut ja = stdout_json(&a);
    let mut jb = stdout_json(&b);
    strip_time(&mut ja);
    strip_time(&mut jb);
    assert_eq!(ja, jb);

    // the environment variable overrides the flag
    let c = bin()
        .args(["steenrod", "verify", "--suite", "fibers", "--seed", "1"])
        .env("STEENCALC_SEED", "42")
        .output()
        .unwrap();
    let mut jc = stdout_json(&c);
    strip_time(&mut jc);
    assert_eq!(ja, jc);

    let bad = bin()
        .args(["steenrod", "verify", "--suite", "fibers"])
        .env("STEENCALC_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

const KUMMER_ALGEBRA: &str = r#"{
    "p": 3, "q": 7,
    "components": {"0": ["e"], "1": ["t"], "2": ["t2"]},
    "products": [["t","t","t2"], ["t","t2","3*e"], ["t2","t2","3*t"]],
    "unit": "e"
}"#;

#[test]
fn torsor_check_on_kummer_file() {
    let path = temp_file("kummer.json", KUMMER_ALGEBRA);
    let out = run(&["torsor", "check", "--algebra", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["torsor"], true);
    assert_eq!(v["result"]["mixed"], false);
    let conditions = v["result"]["conditions"].as_object().unwrap();
    assert!(conditions.values().all(|b| *b == serde_json::Value::Bool(true)));
}

#[test]
fn torsor_deform_on_cone() {
    let cone = r#"{
        "p": 3, "q": 5,
        "components": {"0": ["e"], "1": ["t"], "2": ["t2"]},
        "products": [["t","t","t2"], ["t","t2","0"], ["t2","t2","0"]],
        "unit": "e"
    }"#;
    let path = temp_file("cone.json", cone);
    let out = run(&["torsor", "deform", "--algebra", path.to_str().unwrap(), "--kmax", "4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["kmax"], 4);
    // the same file fails the torsor check without being mixed
    let out = run(&["torsor", "check", "--algebra", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["torsor"], false);
    assert_eq!(v["result"]["mixed"], false);
}

#[test]
fn torsor_input_errors_exit_2() {
    let out = run(&["torsor", "check", "--algebra", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    let bad = temp_file("bad.json", r#"{"p": 3}"#);
    let out = run(&["torsor", "check", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kummer_factor_outputs() {
    let out = run(&["kummer", "factor", "--q", "7", "--p", "3", "--a", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let factors = v["result"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["degree"], 3);
    assert_eq!(factors[0]["multiplicity"], 1);

    let out = run(&["kummer", "factor", "--q", "5", "--p", "3", "--a", "2"]);
    let v = stdout_json(&out);
    let degrees: Vec<u64> = v["result"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, vec![1, 2]);

    // a = 0 is a domain error
    let out = run(&["kummer", "factor", "--q", "7", "--p", "3", "--a", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // q not a prime power
    let out = run(&["kummer", "factor", "--q", "6", "--p", "3", "--a", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kcomplex_check_worked_example() {
    let out = run(&["kcomplex", "check", "--q", "7", "--p", "3", "--a", "3", "--f", "t"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["holds"], true);
    let places = v["result"]["places"].as_array().unwrap();
    assert!(places.iter().any(|p| p["place"] == "infinity"));
    assert!(places.iter().all(|p| p["holds"] == true));

    // rational-function syntax
    let out = run(&[
        "kcomplex", "check", "--q", "13", "--p", "3", "--a", "(t^2-1)/(t-3)", "--f",
        "t^2 + t + 1",
    ]);
    assert!(out.status.success());

    // zero inputs are input errors
    let out = run(&["kcomplex", "check", "--q", "7", "--p", "3", "--a", "0", "--f", "t"]);
    assert_eq!(out.status.code(), Some(2));
}
