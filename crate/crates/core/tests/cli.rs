use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn urd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_urd"))
        .args(args)
        .output()
        .expect("run urd")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_lists_pairs_with_verdicts() {
    let out = urd(&["check", "--v", "12", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("CONSTRUCTIVE ell=0"), "{text}");
    assert!(text.contains("CONSTRUCTIVE ell=1"), "{text}");
}

#[test]
fn check_single_pair_exit_codes() {
    assert_eq!(
        code(&urd(&[
            "check", "--v", "12", "--n", "3", "--r", "5", "--s", "4"
        ])),
        0
    );
    assert_eq!(
        code(&urd(&[
            "check", "--v", "12", "--n", "3", "--r", "4", "--s", "4"
        ])),
        3
    );
    assert_eq!(
        code(&urd(&[
            "check", "--v", "8", "--n", "3", "--r", "1", "--s", "4"
        ])),
        4
    );
    assert_eq!(code(&urd(&["check", "--v", "12", "--n", "4"])), 2);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&urd(&["build", "--v", "12"])), 2);
    assert_eq!(code(&urd(&["frobnicate"])), 2);
    assert_eq!(
        code(&urd(&[
            "build", "--v", "12", "--n", "3", "--ell", "0", "--r", "5", "--s", "4"
        ])),
        2
    );
}

#[test]
fn build_by_ell_and_by_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let out = urd(&[
        "build",
        "--v",
        "12",
        "--n",
        "3",
        "--ell",
        "0",
        "--out",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = read_json(&a);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 9);
    assert_eq!((doc["r"].as_u64(), doc["s"].as_u64()), (Some(5), Some(4)));

    let b = dir.path().join("b.json");
    let out = urd(&[
        "build",
        "--v",
        "16",
        "--n",
        "3",
        "--r",
        "9",
        "--s",
        "4",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_json(&b)["classes"].as_array().unwrap().len(), 13);
    assert!(!dir.path().join("b.partial").exists());
}

#[test]
fn build_rejections() {
    assert_eq!(
        code(&urd(&["build", "--v", "12", "--n", "3", "--ell", "2"])),
        3
    );
    assert_eq!(
        code(&urd(&[
            "build", "--v", "12", "--n", "3", "--r", "4", "--s", "4"
        ])),
        3
    );
    assert_eq!(
        code(&urd(&[
            "build", "--v", "16", "--n", "3", "--r", "3", "--s", "8"
        ])),
        4
    );
}

#[test]
fn text_format_goes_to_stdout() {
    let out = urd(&[
        "build", "--v", "12", "--n", "3", "--ell", "1", "--format", "text",
    ]);
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).trim_start().starts_with('{'));
}

#[test]
fn verify_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&urd(&[
            "build", "--v", "20", "--n", "3", "--ell", "1", "--out", p
        ])),
        0
    );
    let out = urd(&["verify", "--in", p]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASSED"));

    let mut doc = read_json(&path);
    let first = doc["classes"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|c| c["kind"] == "one_factor")
        .unwrap();
    first["blocks"].as_array_mut().unwrap().pop();
    fs::write(&path, doc.to_string()).unwrap();
    let out = urd(&["verify", "--in", p]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("MISSING_EDGE"), "{text}");
    assert!(text.contains("NOT_SPANNING"), "{text}");
}

#[test]
fn verify_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"version\": \"1\", \"v\": 12").unwrap();
    assert_eq!(code(&urd(&["verify", "--in", path.to_str().unwrap()])), 2);
    fs::write(
        &path,
        r#"{"version":"9","v":4,"n":3,"m":1,"r":3,"s":0,"classes":[]}"#,
    )
    .unwrap();
    assert_eq!(code(&urd(&["verify", "--in", path.to_str().unwrap()])), 2);
    let missing = dir.path().join("absent.json");
    assert_eq!(
        code(&urd(&["verify", "--in", missing.to_str().unwrap()])),
        2
    );
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let out = urd(&[
        "search",
        "--v",
        "8",
        "--n",
        "3",
        "--r",
        "1",
        "--s",
        "4",
        "--out",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("FOUND"));
    assert_eq!(code(&urd(&["verify", "--in", w.to_str().unwrap()])), 0);

    let out = urd(&["search", "--v", "12", "--n", "3", "--r", "4", "--s", "4"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("NOT_FOUND_EXHAUSTED"));

    let out = urd(&[
        "search",
        "--v",
        "24",
        "--n",
        "3",
        "--r",
        "5",
        "--s",
        "12",
        "--max-nodes",
        "1000",
    ]);
    assert_eq!(code(&out), 6);
    assert!(stdout(&out).contains("BUDGET_EXCEEDED"));

    assert_eq!(
        code(&urd(&[
            "search", "--v", "10", "--n", "3", "--r", "9", "--s", "0"
        ])),
        2
    );
}
