//! The binding functions called directly, without an interpreter.

use toc::{bound, catalog_names, construct, paper_style_text, verify};

#[test]
fn construct_then_verify() {
    let cert = construct(3, 4, 3, 3, "auto").unwrap();
    let doc: serde_json::Value = serde_json::from_str(&cert).unwrap();
    assert_eq!(doc["tiles"].as_array().unwrap().len(), 4);
    let verdict: serde_json::Value = serde_json::from_str(&verify(&cert, false).unwrap()).unwrap();
    assert_eq!(verdict["ok"], true);
    assert!(paper_style_text(&cert).unwrap().starts_with("TOC_3(4,3,3)"));
}

#[test]
fn bound_json() {
    let b: serde_json::Value = serde_json::from_str(&bound(3, 4, 4, 3).unwrap()).unwrap();
    assert_eq!(b["exact"], 2);
}

#[test]
fn catalog_listed() {
    assert!(catalog_names().iter().any(|n| n == "lgs_1_3_8_3"));
}
