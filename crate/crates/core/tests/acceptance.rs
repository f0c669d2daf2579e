//! Full verification battery over the default population. Prints one
//! pass/fail line per criterion.

use std::time::Duration;

use upperspace::suite::{run_suite, SuiteConfig};

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    let report = run_suite(&cfg).expect("suite execution");
    let mut all_pass = true;
    for c in &report.criteria {
        println!(
            "criterion {}: {} [{}] ({} cases, {} ms){}",
            c.id,
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.cases,
            c.millis,
            c.detail.as_deref().map(|d| format!(" — {d}")).unwrap_or_default(),
        );
        all_pass &= c.pass;
    }
    assert!(all_pass, "at least one criterion failed");
    assert_eq!(report.criteria.len(), 9);

    let elapsed = |id: u8| {
        Duration::from_millis(
            report.criteria.iter().find(|c| c.id == id).unwrap().millis as u64,
        )
    };
    assert!(elapsed(1) < Duration::from_secs(60));
    assert!(elapsed(4) < Duration::from_secs(120));
    assert!(elapsed(8) < Duration::from_secs(5));
}
