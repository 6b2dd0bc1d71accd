//! End-to-end tests of the `symchar` binary.

use std::process::{Command, Output};

fn symchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symchar"))
        .args(args)
        .env_remove("SYMCHAR_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_text_exact() {
    let out = symchar(&["compute", "--formula", "d", "--n", "3", "--no-cache"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "s[3] + q*s[1,1,1]");
}

#[test]
fn compute_latex() {
    let out = symchar(&[
        "compute", "--formula", "d", "--n", "3", "--format", "latex", "--no-cache",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "s_{3} + q s_{1,1,1}");
}

#[test]
fn lyndon_in_power_basis() {
    let out = symchar(&[
        "compute", "--formula", "lyndon", "--n", "6", "--basis", "p", "--format", "json",
        "--no-cache",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["formula"], "lyndon");
    assert_eq!(doc["basis"], "p");
    let terms = doc["terms"].as_array().unwrap();
    let coeff_of = |parts: &[u64]| {
        terms
            .iter()
            .find(|t| {
                t["partition"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap())
                    .collect::<Vec<_>>()
                    == parts
            })
            .map(|t| t["coeff"].as_str().unwrap().to_string())
    };
    assert_eq!(coeff_of(&[1, 1, 1, 1, 1, 1]).as_deref(), Some("1/6"));
    assert_eq!(coeff_of(&[2, 2, 2]).as_deref(), Some("-1/6"));
    assert_eq!(coeff_of(&[3, 3]).as_deref(), Some("-1/6"));
    assert_eq!(coeff_of(&[6]).as_deref(), Some("1/6"));
    assert_eq!(terms.len(), 4);
}

#[test]
fn json_is_deterministic_modulo_meta() {
    let run = || {
        let out = symchar(&[
            "compute", "--formula", "ot", "--n", "3", "--max-q-degree", "4", "--format", "json",
            "--no-cache",
        ]);
        assert!(out.status.success());
        let mut doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        doc.as_object_mut().unwrap().remove("meta");
        doc
    };
    assert_eq!(run(), run());
}

#[test]
fn text_output_is_byte_identical_across_runs() {
    let run = || stdout(&symchar(&["compute", "--formula", "c", "--n", "5", "--no-cache"]));
    assert_eq!(run(), run());
}

#[test]
fn usage_error_is_exit_2() {
    let out = symchar(&["compute", "--formula", "nope", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symchar(&["verify", "--check", "nope", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_oracle_is_exit_3() {
    let out = symchar(&["oracle", "--algebra", "ot", "--n", "40", "--max-degree", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_small_suite_passes() {
    let out = symchar(&["verify", "--check", "mpy", "--n-max", "4", "--no-cache"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    for n in 1..=4 {
        assert!(text.contains(&format!("PASS mpy n={n}")), "{text}");
    }
}

#[test]
fn oracle_subcommand_matches_formula() {
    let brute = symchar(&["oracle", "--algebra", "d", "--n", "3", "--max-degree", "2"]);
    assert!(brute.status.success());
    assert_eq!(stdout(&brute).trim(), "s[3] + q*s[1,1,1]");
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "compute", "--formula", "lambda", "--n", "6", "--format", "json", "--cache-dir", cache,
    ];

    let first = symchar(&args);
    assert!(first.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(doc["meta"]["cache_hit"], false);
    let path = dir.path().join("chartab_v1_n6.json");
    assert!(path.exists());

    let second = symchar(&args);
    assert!(second.status.success());
    let doc2: serde_json::Value = serde_json::from_str(&stdout(&second)).unwrap();
    assert_eq!(doc2["meta"]["cache_hit"], true);
    // payload identical either way
    let strip = |mut d: serde_json::Value| {
        d.as_object_mut().unwrap().remove("meta");
        d
    };
    assert_eq!(strip(doc), strip(doc2));

    // corrupt one file: the run must still succeed and heal the cache
    std::fs::write(&path, b"{ not json").unwrap();
    let third = symchar(&args);
    assert!(third.status.success());
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));
    let healed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(healed["n"], 6);
}

#[test]
fn cache_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_symchar"))
        .args(["compute", "--formula", "lambda", "--n", "4"])
        .env("SYMCHAR_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("chartab_v1_n4.json").exists());
}
