//! End-to-end runs of the `toc` binary.

use std::process::{Command, Output};

fn toc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toc"))
        .args(args)
        .output()
        .expect("toc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_d5_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let o = toc(&[
        "construct",
        "--q",
        "3",
        "--n",
        "9",
        "--d",
        "5",
        "--w",
        "3",
        "--out",
        p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert["schema"], 1);
    assert_eq!(cert["tiles"].as_array().unwrap().len(), 112);
    assert_eq!(cert["manifest"]["output"], p);
    let o = toc(&["verify", p]);
    assert_eq!(o.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(verdict["ok"], true);
}

#[test]
fn tampered_certificate_fails() {
    let o = toc(&["construct", "--q", "3", "--n", "4", "--d", "4", "--w", "3"]);
    let mut cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let moved = cert["tiles"][0].as_array_mut().unwrap().pop().unwrap();
    cert["tiles"][1].as_array_mut().unwrap().push(moved);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, cert.to_string()).unwrap();
    let o = toc(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("distance_violation"));
}

#[test]
fn certificates_are_reproducible() {
    let args = ["construct", "--q", "4", "--n", "6", "--d", "6", "--w", "3"];
    assert_eq!(toc(&args).stdout, toc(&args).stdout);
}

#[test]
fn bound_binary_n10() {
    let o = toc(&["bound", "--q", "2", "--n", "10", "--d", "4", "--w", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], 13);
}

#[test]
fn nonexistence_exit() {
    let o = toc(&["construct", "--q", "2", "--n", "10", "--d", "4", "--w", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("n ≡ 4,5 (mod 6)") && err.contains("A_2(n,4,3)"),
        "{err}"
    );
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(toc(&["construct", "--bogus"]).status.code(), Some(64));
    assert_eq!(toc(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(toc(&["design", "sts"]).status.code(), Some(64));
    assert_eq!(toc(&["--help"]).status.code(), Some(0));
}

#[test]
fn unknown_method_is_unsupported() {
    let o = toc(&[
        "construct",
        "--q",
        "3",
        "--n",
        "4",
        "--d",
        "4",
        "--w",
        "3",
        "--method",
        "magic",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn paper_style_output() {
    let o = toc(&[
        "construct",
        "--q",
        "3",
        "--n",
        "4",
        "--d",
        "3",
        "--w",
        "3",
        "--paper-style",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("TOC_3(4,3,3): 4 tiles"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn oa_csv() {
    let o = toc(&["oa", "--t", "2", "--k", "4", "--g", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 9);
    assert!(
        toc(&["oa", "--t", "3", "--k", "5", "--g", "2"])
            .status
            .code()
            != Some(0)
    );
}

#[test]
fn coloring_and_designs() {
    let o = toc(&["coloring", "baranyai", "--n", "6", "--w", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 10);
    let o = toc(&["design", "sts", "--n", "9"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 12);
    let o = toc(&["design", "lkts"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 7);
}

#[test]
fn catalog_list_and_override() {
    let o = toc(&["catalog", "list"]);
    assert!(stdout(&o).contains("toc_3_4_4_3"));
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_toc"))
        .args(["catalog", "list"])
        .env("TOC_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn acceptance_subset() {
    let o = toc(&["acceptance", "--only", "1,3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS  1") && text.contains("PASS  3"));
}
