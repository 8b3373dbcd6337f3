//! Prints one PASS/FAIL line per acceptance criterion, then fails if any did.

use symdesign::acceptance::run_all;

#[test]
fn acceptance() {
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let results = run_all(jobs, 1);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.number).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
