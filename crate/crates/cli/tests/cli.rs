//! End-to-end tests of the `szego` binary: JSON round trips, exit codes,
//! determinism, and stdin handling.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn szego(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szego"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn szego_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_szego"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compose_documented_example() {
    let out = szego(&["compose", "--n", "3", "--factors", r#"["2", "3"]"#]);
    let v = stdout_json(&out);
    assert_eq!(v, serde_json::json!({ "coeffs": ["6", "35/3", "20/3", "1"] }));
}

#[test]
fn compose_then_decompose_round_trips_byte_identically() {
    let factors = r#"["2", "3", "-1/2", "0"]"#;
    let composed = szego(&["compose", "--n", "5", "--factors", factors]);
    let poly = String::from_utf8(stdout_json(&composed).to_string().into_bytes()).unwrap();
    let decomposed = szego(&["decompose", "--n", "5", "--poly", &poly]);
    let fm = stdout_json(&decomposed);
    // Re-encode the recovered factors as a flat list and compose again.
    let mut flat: Vec<serde_json::Value> = fm["rational"].as_array().unwrap().clone();
    for _ in 0..fm["zeros"].as_u64().unwrap() {
        flat.push(serde_json::json!("0"));
    }
    let recomposed = szego(&["compose", "--n", "5", "--factors", &serde_json::Value::Array(flat).to_string()]);
    assert_eq!(composed.stdout, recomposed.stdout);
}

#[test]
fn decompose_reads_stdin() {
    let out = szego_stdin(
        &["decompose", "--n", "3", "--poly", "-"],
        r#"{"coeffs":["6","35/3","20/3","1"]}"#,
    );
    let v = stdout_json(&out);
    assert_eq!(v["rational"], serde_json::json!(["2", "3"]));
}

#[test]
fn signature_of_documented_example() {
    let out = szego(&[
        "signature",
        "--n",
        "3",
        "--poly",
        r#"{"coeffs":["6","35/3","20/3","1"]}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["roots"]["neg"], 2);
    assert_eq!(v["neg_a"]["neg"], 2);
}

#[test]
fn check_passes_on_composed_instance() {
    let out = szego(&[
        "check",
        "--n",
        "3",
        "--poly",
        r#"{"coeffs":["6","35/3","20/3","1"]}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
}

#[test]
fn enumerate_cases_csv_is_stable() {
    let a = szego(&["enumerate-cases", "--n", "4"]);
    let b = szego(&["enumerate-cases", "--n", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("case,n,q,q1,q_c,k,k1,k_c,m,r,s,delta,construction_unsupported"));
    assert!(text.lines().count() > 10);
}

#[test]
fn realize_all_n2_emits_three_certificates() {
    let out = szego(&["realize-all", "--n", "2", "--mode", "polynomial"]);
    let v = stdout_json(&out);
    assert_eq!(v["realized"], 3);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 3);
}

#[test]
fn realize_output_is_deterministic_and_seed_sensitive() {
    let spec = r#"{"case":2,"n":3,"q":0,"q1":2,"q_c":0,"k":0,"k1":0,"k_c":0,"m":0,"r":0,"s":0,"delta":0}"#;
    let a = szego(&["realize", "--spec", spec]);
    let b = szego(&["realize", "--spec", spec]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // SZEGO_SEED moves the search.
    let c = Command::new(env!("CARGO_BIN_EXE_szego"))
        .args(["realize", "--spec", spec])
        .env("SZEGO_SEED", "7")
        .output()
        .unwrap();
    assert!(c.status.success());
    assert_ne!(a.stdout, c.stdout);
    // An explicit --seed matching the env var reproduces it.
    let d = szego(&["realize", "--spec", spec, "--seed", "7"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn phi_reports_known_eigenvalues() {
    let out = szego(&["phi", "--n-max", "3"]);
    let v = stdout_json(&out);
    let n3_pol = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n"] == 3 && r["mode"] == "polynomial")
        .unwrap();
    let eigen: Vec<String> = n3_pol["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e[0].as_str().unwrap().to_string())
        .collect();
    assert!(eigen.contains(&"3/2".to_string()) && eigen.contains(&"1".to_string()));
}

#[test]
fn domain_error_is_structured_json_with_exit_1() {
    let out = szego(&["compose", "--n", "3", "--factors", r#"["2"]"#]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    assert!(v["error"]["kind"].is_string());
    assert!(v["error"]["message"].is_string());
}

#[test]
fn usage_error_exits_2() {
    let out = szego(&["compose", "--n", "3", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = szego(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}
