//! Runs every verification suite over a small range and prints a summary.
//!
//! Pass `classical` as the first argument to replay the definition-sensitive
//! suites with the classical unit inverse and see the predicted failures.

use modrecip::modular::InverseDefinition;
use modrecip::sweep::{run_all, SweepConfig};

fn main() {
    let def = match std::env::args().nth(1).as_deref() {
        Some("classical") => InverseDefinition::ClassicalUnit,
        _ => InverseDefinition::Extended,
    };
    let config = SweepConfig {
        bound: 40,
        ..SweepConfig::default()
    };
    for report in run_all(&config, def) {
        println!(
            "{:<24} {:>7} cases  {:>5} failures ({} predicted)  {}",
            report.name,
            report.checked,
            report.failures,
            report.expected_failures,
            if report.passed() { "ok" } else { "MISMATCH" }
        );
        if let Some(case) = report.counterexample {
            println!("    smallest counterexample {case:?}");
        }
    }
}
