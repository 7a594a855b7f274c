//! The acceptance matrix, one line per criterion.

use toc_core::acceptance::{run_criterion, CRITERIA};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for &(id, ..) in CRITERIA.iter() {
        let r = run_criterion(id).unwrap();
        println!("{}", r.line());
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
