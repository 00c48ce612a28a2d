//! The acceptance battery: every headline criterion, run end to end with
//! the default seed and budgets, printing one pass/fail line per criterion.
//! Run with `cargo test --test acceptance -- --nocapture` to watch the
//! lines; `monoideal check` prints the same report from the CLI.

use monoideal::budget::Budget;
use monoideal::check;

#[test]
fn acceptance_criteria() {
    let reports = check::run_all(0, &Budget::default());
    assert_eq!(reports.len(), 8);
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
