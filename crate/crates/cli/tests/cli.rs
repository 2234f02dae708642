use std::io::Write;
use std::process::{Command, Output};

use veelocus::catalog::{by_name, EXAMPLE_NAMES};
use veelocus::{Command as Cmd, Kind, OutputFormat, RunSpec, SerializedReport};
use veelocus_cli::{run, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};

fn veelocus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veelocus"))
        .args(args)
        .env_remove("VEELOCUS_TOL")
        .output()
        .expect("binary runs")
}

#[test]
fn documented_examples() {
    assert_eq!(veelocus(&["check-locus", "An2:n=2:m=2"]).status.code(), Some(0));
    assert_eq!(veelocus(&["check-vee", "vee-An2:n=3:m=2"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"dim\": 2, ").unwrap();
    let out = veelocus(&["check-locus", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn file_and_stdin_targets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.json");
    let text = r#"{"dim": 2, "kind": "locus", "label": "A2", "entries": [
        {"vector": [{"re": 1, "im": 0}, {"re": 0, "im": 0}], "multiplicity": 1},
        {"vector": [{"re": -0.5, "im": 0}, {"re": 0.8660254037844386, "im": 0}], "multiplicity": 1},
        {"vector": [{"re": 0.5, "im": 0}, {"re": 0.8660254037844386, "im": 0}], "multiplicity": 1}]}"#;
    std::fs::write(&path, text).unwrap();
    assert_eq!(veelocus(&["check-locus", path.to_str().unwrap()]).status.code(), Some(0));

    let mut child = Command::new(env!("CARGO_BIN_EXE_veelocus"))
        .args(["check-vee", "-", "--output", "json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rep: SerializedReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rep.verdict);
    assert_eq!(rep.input.target.as_deref(), Some("-"));
}

#[test]
fn isotropic_file_is_an_invariant_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("iso.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "kind": "locus", "entries": [{"vector": [{"re": 1, "im": 0}, {"re": 0, "im": 1}], "multiplicity": 1}]}"#,
    )
    .unwrap();
    let out = veelocus(&["check-locus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isotropic"));
}

#[test]
fn tolerance_flag_and_environment() {
    let out = veelocus(&["check-locus", "A:2", "--tol", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_veelocus"))
        .args(["check-locus", "A:2", "--output", "json"])
        .env("VEELOCUS_TOL", "1e-7")
        .output()
        .unwrap();
    let rep: SerializedReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep.input.tol, 1e-7);
}

#[test]
fn quiet_prints_nothing() {
    let out = veelocus(&["check-vee", "vee-An2:n=3:m=2", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}

#[test]
fn scan_and_catalog_list() {
    let out = veelocus(&["scan", "prop1:m=2:l=1:k=1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("c^2=m a^2") && text.contains("c^2=-(1+m) a^2"));
    let out = veelocus(&["catalog-list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), EXAMPLE_NAMES.len());
}

#[test]
fn reproduce_json_is_byte_stable() {
    let a = veelocus(&["reproduce", "--output", "json", "--seed", "3"]);
    let b = veelocus(&["reproduce", "--output", "json", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_status_contract_over_catalog() {
    for &name in EXAMPLE_NAMES {
        let kind = by_name(name).unwrap().kind();
        let mut commands = vec![Cmd::CheckVee, Cmd::CheckWdvv];
        if kind == Kind::Locus {
            commands.push(Cmd::CheckLocus);
        }
        for command in commands {
            let spec = RunSpec {
                command,
                target: Some(name.to_string()),
                seed: 1,
                samples: 2,
                tol: 1e-9,
                output: OutputFormat::Json,
            };
            let out = run(&spec, std::io::empty());
            let code = out.exit_code();
            match &out.report {
                Some(r) => assert_eq!(code, if r.verdict { EXIT_PASS } else { EXIT_FAIL }, "{name}"),
                None => assert_eq!(code, EXIT_ERROR, "{name}"),
            }
            if command == Cmd::CheckLocus {
                assert!(out.report.is_some(), "{name}: {:?}", out.error);
            }
        }
    }
}
