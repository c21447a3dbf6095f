//! End-to-end checks of the binary: output formats, exit codes, and graph
//! file handling.

use std::io::Write;
use std::process::{Command, Output};

fn csh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tableaux_values() {
    let out = csh(&["tableaux", "f", "3,2"]);
    assert_eq!(stdout(&out).trim(), "5");
    let out = csh(&["tableaux", "f", "1,1,1,1"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = csh(&["tableaux", "kostka", "4,3,1", "3,3,2"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = csh(&["tableaux", "character", "3,2", "2,1,1,1"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = csh(&["tableaux", "syt", "3,2", "--list"]);
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().trim() == "5");
    assert!(text.contains("1 2 3 / 4 5"));
}

#[test]
fn csf_star3_and_exit_codes() {
    let out = csh(&["csf", "--star", "3", "--basis", "monomial"]);
    assert_eq!(stdout(&out), "m_{2,1}: 1\nm_{1,1,1}: 6\n");
    let out = csh(&["csf", "--star", "3", "--basis", "schur"]);
    assert_eq!(stdout(&out), "s_{2,1}: 1\ns_{1,1,1}: 4\n");

    // Usage errors exit with 1.
    assert_eq!(csh(&["csf"]).status.code(), Some(1));
    assert_eq!(csh(&["csf", "--star", "3", "--graph", "x"]).status.code(), Some(1));
    assert_eq!(csh(&["tableaux", "f", "1,2"]).status.code(), Some(1));
    assert_eq!(csh(&["nonsense"]).status.code(), Some(1));
    // Size-budget violations are usage errors too.
    assert_eq!(csh(&["homology", "--star", "8", "-i", "1"]).status.code(), Some(1));
    assert_eq!(csh(&["--help"]).status.code(), Some(0));
}

#[test]
fn graph_file_parsing() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# one edge on two vertices").unwrap();
    writeln!(file, "2 1").unwrap();
    writeln!(file, "1 2").unwrap();
    let path = file.path().to_str().unwrap();
    let out = csh(&["csf", "--graph", path]);
    assert_eq!(stdout(&out), "m_{1,1}: 2\n");
    assert_eq!(out.status.code(), Some(0));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "2 1").unwrap();
    writeln!(bad, "1 3").unwrap();
    let out = csh(&["csf", "--graph", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn homology_table_and_csv() {
    let out = csh(&["homology", "--star", "5", "-i", "1"]);
    let text = stdout(&out);
    assert!(text.contains("\"3,2\": 1"));
    assert!(text.contains("\"2,2,1\": 3"));
    let out = csh(&["homology", "--star", "4", "-i", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "partition,multiplicity\n\"2,2\",1\n");
    // Default index is 1.
    let out = csh(&["homology", "--star", "4"]);
    assert!(stdout(&out).contains("\"2,2\": 1"));
    let out = csh(&["homology", "--star", "4", "-i", "0"]);
    assert!(stdout(&out).contains("\"1,1,1,1\": 1"));
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = ["homology", "--star", "4", "-i", "1", "--format", "json", "--seed", "7"];
    let a = csh(&args);
    let b = csh(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["command"], "homology");
    assert_eq!(v["input"]["graph"], "star(4)");
    assert_eq!(v["result"][0]["partition"], "2,2");
    assert_eq!(v["result"][0]["multiplicity"], "1");
    assert!(v["metadata"]["isotypic_ranks"].is_array());
}

#[test]
fn modular_mode_records_primes() {
    let out = csh(&[
        "homology", "--star", "4", "-i", "1", "--format", "json", "--rank-mode", "modular",
        "--seed", "99",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["metadata"]["rank_backend"], "modular");
    assert_eq!(v["metadata"]["primes"].as_array().unwrap().len(), 2);
    assert_eq!(v["metadata"]["seed"], 99);
    // Same seed, same primes; the result is backend-independent.
    let again = csh(&[
        "homology", "--star", "4", "-i", "1", "--format", "json", "--rank-mode", "modular",
        "--seed", "99",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn predict_flags_conjecture_dependence() {
    let out = csh(&["predict", "--star", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["metadata"]["assumes_conjecture"], true);
    assert_eq!(v["result"].as_array().unwrap().len(), 4);
    let human = csh(&["predict", "--star", "6"]);
    assert!(stdout(&human).contains("assumes the vanishing conjecture"));
}

#[test]
fn verify_commands_exit_zero() {
    let out = csh(&["verify", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 4);
    let out = csh(&["verify", "cross", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 2);
}
