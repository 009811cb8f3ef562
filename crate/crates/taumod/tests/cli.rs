//! End-to-end checks of the command-line surface: generate, reload,
//! check, and verify through the real binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_taumod"))
}

#[test]
fn gen_check_roundtrip() {
    let dir = std::env::temp_dir().join("taumod-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unit.json");
    let out = bin()
        .args([
            "gen",
            "--kind",
            "unit",
            "--pair",
            "F2[t]/(t^2) | F4",
            "--rank",
            "2",
            "--seed",
            "5",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let check = bin()
        .args(["check", "unit", "unit", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(check.status.success());
    assert_eq!(String::from_utf8_lossy(&check.stdout), "true\n");

    let flat = bin()
        .args(["check", "flat", "unit", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(flat.status.success());

    let verify = bin()
        .args(["verify-theorems", "--corpus", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(verify.status.success());
    assert!(String::from_utf8_lossy(&verify.stdout).contains("PASS"));
}

#[test]
fn gen_is_byte_deterministic() {
    let run = || {
        bin()
            .args(["gen", "--kind", "carlitz", "--seed", "9"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn inputs_errors_exit_2() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["check", "unit", "m", "--input", "/nonexistent/path.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_names_the_path() {
    let dir = std::env::temp_dir().join("taumod-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"fields": {"F2": {"p": 2, "a": 1}},
           "algebras": {"A": {"field": "F2", "dim": 1, "mul": [[[[1]]]], "one": [[1]], "label": "F2"}},
           "tensor_algebras": {"S": {"lambda": "A", "r": "B"}}}"#,
    )
    .unwrap();
    let out = bin()
        .args(["verify-axioms", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tensor_algebras/S"));
}
