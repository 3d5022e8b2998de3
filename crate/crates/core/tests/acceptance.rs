//! Runs the full acceptance battery and reports one line per criterion.
//! Run with `--nocapture` to see the lines even when everything passes.

use coinv::acceptance::run_all;

#[test]
fn acceptance_criteria() {
    let results = run_all();
    assert_eq!(results.len(), 17);
    let mut failed = 0;
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} ({:.2}s) — {}", r.name, r.seconds, r.details);
        if !r.passed {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
