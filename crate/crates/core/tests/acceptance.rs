//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::time::Instant;

use multiloop::suite::{run_check, CHECKS, DEFAULT_SEED};

fn main() {
    let mut failed = Vec::new();
    for (id, _, _) in CHECKS {
        let start = Instant::now();
        let o = run_check(id, DEFAULT_SEED).expect("known criterion");
        let status = if o.passed { "PASS" } else { "FAIL" };
        let ms = start.elapsed().as_millis();
        println!("{status} criterion {:>2} {} ({ms} ms): {}", o.id, o.name, o.detail);
        if !o.passed {
            failed.push(id);
        }
    }
    println!("acceptance: {} of {} criteria passed", CHECKS.len() - failed.len(), CHECKS.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
