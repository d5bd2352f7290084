use std::process::Command;

use cayley_spectra::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cayley-spectra").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn lambda2_line() {
    let (code, out, _) = call(&["lambda2", "--n", "6", "--k", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("18  witnesses: [5,1]"), "{out}");
}

#[test]
fn character_value() {
    assert_eq!(call(&["char", "--partition", "3,2", "--type", "3,1,1"]).1, "-1\n");
    assert_eq!(call(&["char", "--partition", "2,1^3", "--type", "5"]).1, "-1\n");
}

#[test]
fn spectrum_json_contract() {
    let (code, out, _) = call(&["spectrum", "--n", "4", "--k", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["valency"], "8");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    assert_eq!(entries[4]["partition"], "2,2");
    assert_eq!(entries[4]["eigenvalue"], "-4");
    assert_eq!(entries[4]["multiplicity"], "4");
}

#[test]
fn spectrum_csv() {
    let (_, out, _) = call(&["spectrum", "--n", "3", "--k", "1", "--format", "csv"]);
    assert_eq!(out, "partition,eigenvalue,multiplicity\n\"3\",3,1\n\"2,1\",0,4\n\"1,1,1\",-3,1\n");
}

#[test]
fn conjecture_and_table1_pass() {
    let (code, out, _) = call(&["conjecture", "--n-max", "9", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["all_pass"], true);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 21);

    let (code, out, _) = call(&["table1", "--n", "12", "--k", "3", "--shape", "n-1,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.contains("ok"));
}

#[test]
fn quotient_csv() {
    let (code, out, _) = call(&["quotient", "--n", "4", "--k", "0", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0,2,2,2\n2,0,2,2\n2,2,0,2\n2,2,2,0\n");
}

#[test]
fn bruteforce_and_hypothesis() {
    let (code, out, _) = call(&["bruteforce", "--n", "4", "--k", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("spectra agree\n"), "{out}");

    let (code, out, _) = call(&["hypothesis", "--n", "8", "--k", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["flags"]["unique_rimhook_range"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["lambda2", "--n", "6"]).0, EXIT_USAGE);
    assert_eq!(call(&["lambda2", "--n", "6", "--k", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["lambda2", "--n", "20", "--k", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["bruteforce", "--n", "7", "--k", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["char", "--partition", "2,3", "--type", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify-recursive-5cycles", "--tol", "0"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("frobnicate"));
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn certification_with_starved_iterations_fails() {
    let (code, out, _) = call(&["verify-recursive-5cycles", "--max-iter", "3", "--format", "json"]);
    assert_eq!(code, EXIT_VERIFICATION_FAILED);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["all_pass"], false);
}

#[test]
fn binary_exit_codes_and_env_limit() {
    let bin = env!("CARGO_BIN_EXE_cayley-spectra");
    let ok = Command::new(bin).args(["--threads", "1", "lambda2", "--n", "7", "--k", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).split_whitespace().next(), Some("70"));

    let limited = Command::new(bin)
        .env("CAYLEY_SPECTRA_MAX_N", "6")
        .args(["spectrum", "--n", "7", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(EXIT_USAGE));

    let raised = Command::new(bin)
        .env("CAYLEY_SPECTRA_MAX_N", "16")
        .args(["lambda2", "--n", "16", "--k", "4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(EXIT_OK));
    let doc: serde_json::Value = serde_json::from_slice(&raised.stdout).unwrap();
    assert!(doc["witnesses"].as_array().unwrap().contains(&"15,1".into()));

    let bad = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
