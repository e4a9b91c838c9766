//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are reported but do not fail the
//! target; anything else failing exits with status 1. Set `PVI_SUITE=fast`
//! for the reduced draw counts.

use pvi::crosscheck::{run_suite, Suite, KNOWN_FAILURES};

fn main() {
    let suite = match std::env::var("PVI_SUITE").as_deref() {
        Ok("fast") => Suite::Fast,
        _ => Suite::Full,
    };
    let results = run_suite(suite, 7);
    let mut unexpected = Vec::new();
    for r in &results {
        println!("{}", r.line());
        for n in &r.notes {
            println!("    {n}");
        }
        if !r.passed && !KNOWN_FAILURES.contains(&r.id.as_str()) {
            unexpected.push(r.id.clone());
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("{passed}/{} criteria passed", results.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {}", unexpected.join(", "));
        std::process::exit(1);
    }
}
