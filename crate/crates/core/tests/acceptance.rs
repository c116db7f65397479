//! Acceptance suite. Runs every criterion in order, prints one line per
//! criterion, and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use modrecip::bench::run_bench;
use modrecip::identities::{
    reduce_inverse_plus, reduce_inverse_plus_with, sum_of_squares_inverses,
};
use modrecip::modular::InverseDefinition;
use modrecip::recip::inverse_via_reciprocity;
use modrecip::sweep::{self, SweepConfig};
use modrecip::{brute_force_inverse, cli, mod_inverse, reciprocity_check, Integer};
use num_integer::Integer as _;

fn int(v: i64) -> Integer {
    Integer::from(v)
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Inverse of 7 modulo 22, the reduction formula with the extended unit
/// inverse, and its replay with the classical value (7⁻¹)₁ = 0.
fn worked_example() -> Outcome {
    let mut out = Vec::new();
    let code = cli::run(["modrecip", "inv", "7", "22"], &mut out, &mut Vec::new());
    let cli_text = String::from_utf8(out).unwrap();
    let (a, b, k) = (int(7), int(1), int(3));
    let extended = reduce_inverse_plus(&a, &b, &k).unwrap();
    let classical = reduce_inverse_plus_with(InverseDefinition::ClassicalUnit, &a, &b, &k).unwrap();
    let direct = mod_inverse(&a, &int(22)).unwrap();
    let ok = code == 0
        && cli_text.trim() == "19"
        && direct == int(19)
        && extended == int(19)
        && classical == int(18);
    outcome(
        ok,
        format!(
            "inv 7 22 -> {}, 3(7-1)+1 = {extended}, classical replay = {classical}",
            cli_text.trim()
        ),
    )
}

/// Every coprime pair with 1 ≤ |a|, |b| ≤ 64 satisfies the identity with k = 1,
/// across the five sign/unit partitions.
fn reciprocity_sweep() -> Outcome {
    let mut partitions = [0u64; 5];
    let mut violations = Vec::new();
    for a in (-64i64..=64).filter(|&v| v != 0) {
        for b in (-64i64..=64).filter(|&v| v != 0) {
            if a.gcd(&b) != 1 {
                continue;
            }
            let partition = match (a, b) {
                _ if a.abs() == 1 || b.abs() == 1 => 4,
                _ if a > 1 && b > 1 => 0,
                _ if a > 1 => 1,
                _ if b > 1 => 2,
                _ => 3,
            };
            partitions[partition] += 1;
            let r = reciprocity_check(&int(a), &int(b)).unwrap();
            if !(r.holds && r.lhs == int(1 + a * b) && r.k == int(1)) {
                violations.push((a, b));
            }
        }
    }
    let total: u64 = partitions.iter().sum();
    let ok = violations.is_empty() && partitions.iter().all(|&n| n > 0);
    outcome(
        ok,
        format!(
            "{total} pairs, partitions {partitions:?}, {} violations",
            violations.len()
        ),
    )
}

/// Reciprocity recursion, extended-Euclid inverse and exhaustive search agree.
fn oracle_equivalence() -> Outcome {
    let mut checked = 0u64;
    let mut first_bad = None;
    for m in (-200i64..=200).filter(|v| v.abs() > 1) {
        for a in -200i64..=200 {
            if a.gcd(&m) != 1 {
                continue;
            }
            checked += 1;
            let (ai, mi) = (int(a), int(m));
            let x = mod_inverse(&ai, &mi);
            let same = x.is_ok()
                && inverse_via_reciprocity(&ai, &mi) == x
                && brute_force_inverse(&ai, &mi) == x;
            if !same && first_bad.is_none() {
                first_bad = Some((a, m));
            }
        }
    }
    outcome(
        first_bad.is_none(),
        format!("{checked} pairs, first mismatch {first_bad:?}"),
    )
}

/// Shift, reduction, squared-modulus and quadruple sweeps at their default
/// bounds, plus the four exact z-identities counted separately.
fn corollary_sweeps() -> Outcome {
    let config = SweepConfig::default();
    let reports = [
        sweep::shift(&config),
        sweep::reduction(&config, InverseDefinition::Extended),
        sweep::square(&config),
        sweep::quadruples(&config),
    ];
    let mut proof_checked = 0u64;
    let mut proof_failed = 0u64;
    let range: Vec<i64> = (-12i64..=12).filter(|&v| v != 0).collect();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                for &d in &range {
                    let (u, v) = (a * c + b * d, a * d - b * c);
                    if a.gcd(&b) != 1 || c.gcd(&d) != 1 || u.abs() <= 1 || v.abs() <= 1 {
                        continue;
                    }
                    if u.gcd(&v) != 1 {
                        continue;
                    }
                    let r = sum_of_squares_inverses(&int(a), &int(b), &int(c), &int(d)).unwrap();
                    proof_checked += 1;
                    let exact = r.s.clone() * &r.y[0] == &r.v + &r.u * &r.z[0]
                        && r.t.clone() * &r.x[0] == &r.v + &r.u * &r.z[1]
                        && r.s.clone() * &r.y[3] == &r.u - &r.v * &r.z[0]
                        && r.t.clone() * &r.x[3] == &r.u + &r.v * &r.z[2];
                    if !exact || !r.all_pass() {
                        proof_failed += 1;
                    }
                }
            }
        }
    }
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: {}/{}", r.name, r.checked - r.failures, r.checked))
        .collect();
    let ok = reports.iter().all(|r| r.passed() && r.failures == 0) && proof_failed == 0;
    outcome(
        ok,
        format!(
            "{}; exact z-identities {}/{}",
            summary.join(", "),
            proof_checked - proof_failed,
            proof_checked
        ),
    )
}

fn gaussian_sweep() -> Outcome {
    let report = sweep::gaussian(&SweepConfig::default());
    outcome(
        report.passed() && report.failures == 0 && report.checked > 0,
        format!(
            "{} quadruples, {} failures",
            report.checked, report.failures
        ),
    )
}

fn unit_modulus_table() -> Outcome {
    let mut bad = Vec::new();
    for a in (-100i64..=100).filter(|&v| v != 0) {
        for (m, expected) in [
            (1, if a > 0 { 1 } else { 0 }),
            (-1, if a > 0 { 0 } else { -1 }),
        ] {
            if mod_inverse(&int(a), &int(m)).unwrap() != int(expected) {
                bad.push((a, m));
            }
        }
    }
    outcome(bad.is_empty(), format!("400 entries, {} wrong", bad.len()))
}

fn bench_agreement() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for bits in [256, 1024] {
        match run_bench(bits, 1000, 0x5eed) {
            Ok(r) => {
                ok &= r.agreement_count == r.iterations && r.iterations == 1000;
                parts.push(format!(
                    "{bits} bits: {}/{} agree, median {} ns vs {} ns",
                    r.agreement_count, r.iterations, r.median_ns_reciprocity, r.median_ns_ext_gcd
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{bits} bits: {e}"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "1 worked example (7⁻¹)₂₂ = 19, classical replay 18",
            worked_example,
            Duration::from_millis(1),
        ),
        (
            "2 reciprocity sweep |a|,|b| ≤ 64",
            reciprocity_sweep,
            Duration::from_secs(2),
        ),
        (
            "3 oracle equivalence |a|,|m| ≤ 200",
            oracle_equivalence,
            Duration::from_secs(5),
        ),
        (
            "4 corollary sweeps",
            corollary_sweeps,
            Duration::from_secs(10),
        ),
        (
            "5 gaussian sweep [-8, 8]",
            gaussian_sweep,
            Duration::from_secs(5),
        ),
        ("6 unit-modulus table", unit_modulus_table, Duration::MAX),
        (
            "7 bench agreement 256/1024 bits",
            bench_agreement,
            Duration::from_secs(30),
        ),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = result.ok && in_time;
        failed += !ok as usize;
        let limit_text = if limit == Duration::MAX {
            String::new()
        } else {
            format!(" (limit {limit:?})")
        };
        println!(
            "[{}] {name}: {} [{elapsed:.2?}{limit_text}]",
            if ok { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
