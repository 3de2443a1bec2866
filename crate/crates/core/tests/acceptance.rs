//! One line per acceptance criterion, exact checks only.
//!
//! Criterion 5 asks for L-R smash associativity on the Heisenberg group at
//! λ ∈ {0, 1/3, 1/2, 1}. With the stated actions, X⇀ and ↼X are modules
//! over U_t g only at λ = 1 on a nonabelian group, and associativity fails
//! at the other three values with explicit witnesses. That line prints FAIL.
//! It is listed in KNOWN_FAILING so the run still exits 0; if the list goes
//! stale (the criterion starts passing) the run exits 1.

use std::process::ExitCode;
use std::time::Instant;

use starforge::report::Status;
use starforge::verify::{criterion, criterion_title, Options, CRITERIA};

const KNOWN_FAILING: &[u8] = &[5];

fn main() -> ExitCode {
    let opts = Options { seed: 42, inject: false };
    let mut unexpected = Vec::new();
    for k in 1..=CRITERIA {
        let start = Instant::now();
        let report = match criterion(k, &opts) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {k:>2} FAIL {}: error {e}", criterion_title(k));
                unexpected.push(k);
                continue;
            }
        };
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        let ms = start.elapsed().as_millis();
        println!(
            "criterion {k:>2} {verdict} {}: {} checks, {} failed ({ms} ms)",
            criterion_title(k),
            report.checks.len(),
            failed.len()
        );
        for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
            println!("    fail {}: {}", c.id, c.detail);
        }
        if failed.is_empty() == KNOWN_FAILING.contains(&k) {
            unexpected.push(k);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected verdicts for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
