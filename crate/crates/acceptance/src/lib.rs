//! Acceptance harness: prints one PASS/FAIL line per criterion, followed by
//! every check with its measured value and tolerance.

use nuspectra::validate::{Check, Status};

/// Print the criterion and its checks; returns the names of failed checks.
pub fn report(criterion: u32, title: &str, checks: &[Check]) -> Vec<String> {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.check.clone())
        .collect();
    println!(
        "{} criterion {criterion}: {title}",
        if failed.is_empty() { "PASS" } else { "FAIL" }
    );
    for c in checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        println!(
            "    {tag} {}: measured {:.6e}, tolerance {:.3e} ({})",
            c.check, c.measured, c.tolerance, c.reference
        );
    }
    failed
}
