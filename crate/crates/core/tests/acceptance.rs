//! Full acceptance battery: runs every cross-check criterion and prints one
//! pass/fail line per criterion (visible with `--nocapture`).

use quiver_stability::verify;

#[test]
fn acceptance_battery() {
    let reports = verify::run_all_with(&mut |r| {
        println!(
            "[{}] criterion {} ({}): {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.details
        );
        for c in &r.caveats {
            println!("         caveat: {c}");
        }
    })
    .expect("battery must run to completion");
    assert_eq!(reports.len(), 9);
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
