//! Exhaustive verification sweeps over bounded operand ranges.
//!
//! Each suite enumerates its cases, evaluates them on a rayon pool, and
//! compares the observed failures with the failures it predicts. Under the
//! extended definition no case should fail; under
//! [`InverseDefinition::ClassicalUnit`] the definition-sensitive suites
//! predict exactly which cases break.

use std::time::{Duration, Instant};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Deserialize;

use crate::gaussian::{
    gaussian_bezout_identity, gaussian_divides, gaussian_divmod, gaussian_inverse,
    inverse_mod_gaussian_linear, GaussianInteger,
};
use crate::identities::{
    positive_case_exact, quad_pair_inverses, reduce_inverse_minus_with, reduce_inverse_plus,
    reduce_inverse_plus_with, shift_invariance, square_inverse, sum_of_squares_inverses,
};
use crate::modular::{
    brute_force_inverse, classical_inverse, extended_gcd, floor_div, floor_mod, mod_inverse,
    mod_inverse_with, InverseDefinition,
};
use crate::recip::{inverse_via_reciprocity_counted, reciprocity_check_with};
use crate::Integer;

/// Bounds for every suite.
///
/// `bound` caps all of the per-suite bounds, so `bound = 2` yields a tiny
/// sweep everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub bound: i64,
    pub k_bound: i64,
    pub gaussian_bound: i64,
    pub shard_count: usize,
    pub recip_bound: i64,
    pub oracle_bound: i64,
    pub shift_bound: i64,
    pub square_bound: i64,
    pub quad_bound: i64,
    pub linear_bound: i64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            bound: 200,
            k_bound: 10,
            gaussian_bound: 8,
            shard_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            recip_bound: 64,
            oracle_bound: 200,
            shift_bound: 40,
            square_bound: 30,
            quad_bound: 12,
            linear_bound: 30,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid sweep config: {0}")]
    Invalid(&'static str),
}

impl SweepConfig {
    /// Reads `key = value` overrides; absent keys keep their defaults.
    pub fn from_overrides(text: &str) -> Result<Self, ConfigError> {
        let config: SweepConfig = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.bound < 2 {
            return Err(ConfigError::Invalid("bound must be at least 2"));
        }
        if self.shard_count < 1 {
            return Err(ConfigError::Invalid("shard_count must be at least 1"));
        }
        let others = [
            self.k_bound,
            self.gaussian_bound,
            self.recip_bound,
            self.oracle_bound,
            self.shift_bound,
            self.square_bound,
            self.quad_bound,
            self.linear_bound,
        ];
        if others.iter().any(|&b| b < 0) {
            return Err(ConfigError::Invalid("bounds must be non-negative"));
        }
        Ok(())
    }

    fn cap(&self, suite_bound: i64) -> i64 {
        suite_bound.min(self.bound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    /// Cases that failed.
    pub failures: u64,
    /// Cases predicted to fail (zero under the extended definition).
    pub expected_failures: u64,
    /// Cases where observation and prediction disagree.
    pub mismatches: u64,
    /// Smallest mismatching case by total magnitude, then lexicographically.
    pub counterexample: Option<Vec<i64>>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Debug, Clone, Copy)]
struct Verdict {
    failed: bool,
    expected: bool,
}

impl Verdict {
    fn pass_if(ok: bool) -> Option<Verdict> {
        Some(Verdict {
            failed: !ok,
            expected: false,
        })
    }
}

fn case_key(case: &[i64]) -> (i64, Vec<i64>) {
    (case.iter().map(|v| v.abs()).sum(), case.to_vec())
}

fn run_suite<F>(name: &'static str, cases: Vec<Vec<i64>>, check: F) -> SuiteReport
where
    F: Fn(&[i64]) -> Option<Verdict> + Sync,
{
    let start = Instant::now();
    let verdicts: Vec<(&Vec<i64>, Verdict)> = cases
        .par_iter()
        .filter_map(|case| check(case).map(|v| (case, v)))
        .collect();
    let mut report = SuiteReport {
        name,
        checked: verdicts.len() as u64,
        failures: 0,
        expected_failures: 0,
        mismatches: 0,
        counterexample: None,
        elapsed: Duration::ZERO,
    };
    for (case, verdict) in &verdicts {
        report.failures += verdict.failed as u64;
        report.expected_failures += verdict.expected as u64;
        if verdict.failed != verdict.expected {
            report.mismatches += 1;
            let better = report
                .counterexample
                .as_ref()
                .is_none_or(|cur| case_key(case) < case_key(cur));
            if better {
                report.counterexample = Some(case.to_vec());
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

fn nonzero_range(bound: i64) -> impl Iterator<Item = i64> + Clone {
    (-bound..=bound).filter(|&v| v != 0)
}

fn pairs(
    first: impl Iterator<Item = i64>,
    second: impl Iterator<Item = i64> + Clone,
) -> Vec<Vec<i64>> {
    first
        .flat_map(|a| second.clone().map(move |b| vec![a, b]))
        .collect()
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn coprime(a: i64, b: i64) -> bool {
    a.gcd(&b) == 1
}

/// `+1` when the extended inverse exceeds the classical one at a unit
/// modulus, `−1` when it is below, `0` otherwise.
fn unit_delta(a: i64, m: i64) -> i64 {
    match (m, a > 0) {
        (1, true) => 1,
        (-1, false) => -1,
        _ => 0,
    }
}

/// `a = m·⌊a/m⌋ + (a)_m` with the sign window of the modulus.
pub fn division_law(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.oracle_bound);
    let cases = pairs(-bound..=bound, nonzero_range(bound));
    run_suite("division law", cases, |c| {
        let (a, m) = (int(c[0]), int(c[1]));
        let q = floor_div(&a, &m).ok()?;
        let r = floor_mod(&a, &m).ok()?;
        let window = if m.is_positive() {
            !r.is_negative() && r < m
        } else {
            m < r && !r.is_positive()
        };
        Verdict::pass_if(&m * &q + &r == a && window)
    })
}

/// Closed-form values at `m = ±1` for `a ∈ ±[1, 100]`.
pub fn unit_modulus(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(100).max(1);
    let cases = pairs(nonzero_range(bound), [-1i64, 1].into_iter());
    run_suite("unit modulus table", cases, |c| {
        let (a, m) = (c[0], c[1]);
        let expected = match (m, a > 0) {
            (1, true) => 1,
            (1, false) => 0,
            (_, true) => 0,
            (_, false) => -1,
        };
        Verdict::pass_if(mod_inverse(&int(a), &int(m)).ok()? == int(expected))
    })
}

/// `inverse_via_reciprocity = mod_inverse = brute_force_inverse`, consistent
/// with the Bézout certificate, inside the signed window, within the step
/// bound, and differing from the classical value exactly as predicted.
pub fn oracle_equivalence(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.oracle_bound);
    let moduli = nonzero_range(bound).filter(|m| m.abs() > 1);
    let cases = pairs(moduli, nonzero_range(bound));
    run_suite("oracle equivalence", cases, |c| {
        let (a_i, m_i) = (c[1], c[0]);
        if !coprime(a_i, m_i) {
            return None;
        }
        let (a, m) = (int(a_i), int(m_i));
        let Ok(x) = mod_inverse(&a, &m) else {
            return Verdict::pass_if(false);
        };
        let Ok((via_recip, steps)) = inverse_via_reciprocity_counted(&a, &m) else {
            return Verdict::pass_if(false);
        };
        let brute = brute_force_inverse(&a, &m);
        let (g, bezout_x, _) = extended_gcd(&a, &m).ok()?;
        let in_window = if m_i > 0 {
            x >= Integer::one() && x < m
        } else {
            x > m && x <= -Integer::one()
        };
        let congruent = floor_mod(&(&a * &x - 1), &m).ok()?.is_zero();
        let bits = a_i.unsigned_abs().min(m_i.unsigned_abs()).max(1).ilog2() as usize + 1;
        let classical = classical_inverse(&a, &m).ok()?;
        let classical_ok = if m_i > 0 {
            classical == x
        } else {
            classical == &x - &m
        };
        Verdict::pass_if(
            via_recip == x
                && brute.as_ref() == Ok(&x)
                && g.is_one()
                && floor_mod(&bezout_x, &m).ok()? == x
                && in_window
                && congruent
                && steps <= 3 * bits
                && classical_ok,
        )
    })
}

/// `a·(a⁻¹)_b + b·(b⁻¹)_a = 1 + a·b` with `k = 1` for every coprime pair.
///
/// Under the classical unit convention the identity is predicted to fail
/// exactly when one operand is `±1` with the "sign-matching" partner.
pub fn reciprocity(config: &SweepConfig, def: InverseDefinition) -> SuiteReport {
    let bound = config.cap(config.recip_bound);
    let cases = pairs(nonzero_range(bound), nonzero_range(bound));
    run_suite("reciprocity", cases, |c| {
        let (a, b) = (c[0], c[1]);
        if !coprime(a, b) {
            return None;
        }
        let report = reciprocity_check_with(def, &int(a), &int(b)).ok()?;
        let ok = report.holds && report.k.is_one();
        let expected = def == InverseDefinition::ClassicalUnit
            && (unit_delta(a, b) != 0 || unit_delta(b, a) != 0);
        Some(Verdict {
            failed: !ok,
            expected,
        })
    })
}

/// `((ka + b)⁻¹)_a` from the shift rule equals the direct inverse.
pub fn shift(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.shift_bound);
    let kb = config.k_bound;
    let cases: Vec<Vec<i64>> = pairs(nonzero_range(bound), nonzero_range(bound))
        .into_iter()
        .flat_map(|p| (-kb..=kb).map(move |k| vec![p[0], p[1], k]))
        .collect();
    run_suite("shift invariance", cases, |c| {
        let (a, b, k) = (c[0], c[1], c[2]);
        if !coprime(a, b) || k * a + b == 0 {
            return None;
        }
        let value = shift_invariance(&int(a), &int(b), &int(k)).ok();
        let direct = mod_inverse(&int(k * a + b), &int(a)).ok();
        Verdict::pass_if(value.is_some() && value == direct)
    })
}

/// Both reduction formulas against the direct inverse modulo `ka ± b`.
///
/// Under the classical unit convention a case is predicted to fail when the
/// unit-modulus correction of `(a⁻¹)_b` and of `(a⁻¹)_{ka±b}` differ.
pub fn reduction(config: &SweepConfig, def: InverseDefinition) -> SuiteReport {
    let bound = config.cap(config.shift_bound);
    let kb = config.k_bound;
    let moduli = nonzero_range(bound).filter(|a| a.abs() > 1);
    let cases: Vec<Vec<i64>> = pairs(moduli, nonzero_range(bound))
        .into_iter()
        .flat_map(|p| {
            (-kb..=kb).flat_map(move |k| [vec![p[0], p[1], k, 1], vec![p[0], p[1], k, -1]])
        })
        .collect();
    let classical = def == InverseDefinition::ClassicalUnit;
    run_suite("reduction formulas", cases, |c| {
        let (a, b, k, sign) = (c[0], c[1], c[2], c[3]);
        let target = k * a + sign * b;
        if !coprime(a, b) || target == 0 {
            return None;
        }
        let (ai, bi, ki) = (int(a), int(b), int(k));
        let value = if sign > 0 {
            reduce_inverse_plus_with(def, &ai, &bi, &ki)
        } else {
            reduce_inverse_minus_with(def, &ai, &bi, &ki)
        }
        .ok()?;
        let direct = mod_inverse_with(def, &ai, &int(target)).ok()?;
        let expected = classical && unit_delta(a, b) != unit_delta(a, target);
        Some(Verdict {
            failed: value != direct,
            expected,
        })
    })
}

/// Both squared-modulus forms agree with `((b²)⁻¹)_{a²}`.
pub fn square(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.square_bound);
    let moduli = nonzero_range(bound).filter(|a| a.abs() > 1);
    let cases = pairs(moduli, nonzero_range(bound));
    run_suite("squared modulus", cases, |c| {
        let (a, b) = (c[0], c[1]);
        if !coprime(a, b) {
            return None;
        }
        let value = square_inverse(&int(a), &int(b)).ok();
        let direct = mod_inverse(&int(b * b), &int(a * a)).ok();
        Verdict::pass_if(value.is_some() && value == direct)
    })
}

/// Quadruple identities: residue inverses, exact product expansions, exact
/// proof identities, sums-of-squares inverses (when `gcd(u, v) = 1`) and the
/// positive-case exact value.
pub fn quadruples(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.quad_bound);
    let cases: Vec<Vec<i64>> = pairs(nonzero_range(bound), nonzero_range(bound))
        .into_iter()
        .filter(|p| coprime(p[0], p[1]))
        .collect();
    let cases: Vec<Vec<i64>> = cases
        .iter()
        .flat_map(|p| cases.iter().map(move |q| vec![p[0], p[1], q[0], q[1]]))
        .collect();
    run_suite("quadruple identities", cases, |c| {
        let (a, b, cc, d) = (c[0], c[1], c[2], c[3]);
        let (u, v) = (a * cc + b * d, a * d - b * cc);
        if u.abs() <= 1 || v.abs() <= 1 {
            return None;
        }
        let ops = [int(a), int(b), int(cc), int(d)];
        let report = if coprime(u, v) {
            sum_of_squares_inverses(&ops[0], &ops[1], &ops[2], &ops[3])
        } else {
            quad_pair_inverses(&ops[0], &ops[1], &ops[2], &ops[3])
        };
        let Ok(report) = report else {
            return Verdict::pass_if(false);
        };
        let positive_ok = if c.iter().all(|&x| x > 0) {
            positive_case_exact(&ops[0], &ops[1], &ops[2], &ops[3]).as_ref() == Ok(&report.y[0])
        } else {
            true
        };
        Verdict::pass_if(report.all_pass() && positive_ok)
    })
}

/// Gaussian inverse via norms: divisibility, half-norm residue bound, exact
/// Bézout-style identity, divmod law, and representative independence.
pub fn gaussian(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.gaussian_bound);
    let components = pairs(nonzero_range(bound), nonzero_range(bound));
    let cases: Vec<Vec<i64>> = components
        .iter()
        .flat_map(|p| components.iter().map(move |q| vec![p[0], p[1], q[0], q[1]]))
        .collect();
    let shifts = [
        GaussianInteger::one(),
        GaussianInteger::i(),
        GaussianInteger::new(-1, -2),
        GaussianInteger::new(3, 5),
    ];
    run_suite("gaussian inverse", cases, |c| {
        let z = GaussianInteger::new(c[0], c[1]);
        let w = GaussianInteger::new(c[2], c[3]);
        if !z.norm().gcd(&w.norm()).is_one() {
            return None;
        }
        let Ok(inv) = gaussian_inverse(&z, &w) else {
            return Verdict::pass_if(false);
        };
        let diff = &(&z * &inv.canonical) - &GaussianInteger::one();
        let divisible = gaussian_divides(&w, &diff).ok()?;
        let bounded = inv.canonical.norm() * 2 <= w.norm();
        let identity = gaussian_bezout_identity(&z, &w).ok()?;
        let dm = gaussian_divmod(&inv.representative, &w).ok()?;
        let law = &(&w * &dm.quotient) + &dm.remainder == inv.representative;
        let independent = shifts.iter().all(|g| {
            let other = &inv.representative + &(&w * g);
            gaussian_divmod(&other, &w).map(|r| r.remainder) == Ok(inv.canonical.clone())
        });
        Verdict::pass_if(divisible && bounded && identity && law && independent)
    })
}

/// `a·x ≡ 1 (mod a·i + b)` for `x = (a⁻¹)_b + i·(a − (b⁻¹)_a)`.
pub fn gaussian_linear(config: &SweepConfig) -> SuiteReport {
    let bound = config.cap(config.linear_bound);
    let moduli = nonzero_range(bound).filter(|a| a.abs() > 1);
    let cases = pairs(moduli, nonzero_range(bound));
    run_suite("gaussian linear modulus", cases, |c| {
        let (a, b) = (c[0], c[1]);
        if !coprime(a, b) {
            return None;
        }
        let Ok(x) = inverse_mod_gaussian_linear(&int(a), &int(b)) else {
            return Verdict::pass_if(false);
        };
        let modulus = GaussianInteger::new(b, a);
        let diff = &x.scale(&int(a)) - &GaussianInteger::one();
        Verdict::pass_if(gaussian_divides(&modulus, &diff).ok()?)
    })
}

/// The worked inverse `(7⁻¹)_22 = 19` through three routes, plus the replay
/// of the reduction formula with the classical value `(7⁻¹)_1 = 0`, which
/// must give 18.
pub fn worked_example(def: InverseDefinition) -> SuiteReport {
    let cases = vec![vec![7, 1, 3]];
    run_suite("worked example (7⁻¹)₂₂", cases, |_| {
        let (a, b, k) = (int(7), int(1), int(3));
        let direct = mod_inverse(&a, &int(22)).ok()?;
        let formula = reduce_inverse_plus(&a, &b, &k).ok()?;
        let classical_replay =
            reduce_inverse_plus_with(InverseDefinition::ClassicalUnit, &a, &b, &k).ok()?;
        let ok = direct == int(19) && formula == int(19) && classical_replay == int(18);
        let replay = reduce_inverse_plus_with(def, &a, &b, &k).ok()?;
        let expected = def == InverseDefinition::ClassicalUnit;
        Some(Verdict {
            failed: !ok || replay != direct,
            expected,
        })
    })
}

/// All suites. With [`InverseDefinition::ClassicalUnit`] only the suites
/// whose outcome depends on the unit-modulus convention are run.
pub fn run_all(config: &SweepConfig, def: InverseDefinition) -> Vec<SuiteReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.shard_count.max(1))
        .build()
        .expect("failed to build sweep thread pool");
    pool.install(|| match def {
        InverseDefinition::Extended => vec![
            worked_example(def),
            division_law(config),
            unit_modulus(config),
            oracle_equivalence(config),
            reciprocity(config, def),
            shift(config),
            reduction(config, def),
            square(config),
            quadruples(config),
            gaussian(config),
            gaussian_linear(config),
        ],
        InverseDefinition::ClassicalUnit => vec![
            worked_example(def),
            reciprocity(config, def),
            reduction(config, def),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            bound: 6,
            shard_count: 2,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn small_sweep_passes() {
        for report in run_all(&small(), InverseDefinition::Extended) {
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.failures, 0, "{}", report.name);
        }
    }

    #[test]
    fn classical_failures_match_prediction() {
        for report in run_all(&small(), InverseDefinition::ClassicalUnit) {
            assert!(report.passed(), "{report:?}");
            assert!(report.failures > 0, "{}", report.name);
            assert_eq!(report.failures, report.expected_failures);
        }
    }

    #[test]
    fn counterexample_is_minimal() {
        let cases = vec![vec![5, 5], vec![-1, 2], vec![2, 1], vec![0, 9]];
        let report = run_suite("t", cases, |c| Verdict::pass_if(c[0] == 0));
        assert_eq!(report.mismatches, 3);
        assert_eq!(report.counterexample, Some(vec![-1, 2]));
    }

    #[test]
    fn config_overrides() {
        let config = SweepConfig::from_overrides("bound = 32\nk_bound = 3 # small\n").unwrap();
        assert_eq!(config.bound, 32);
        assert_eq!(config.k_bound, 3);
        assert_eq!(config.quad_bound, 12);
        assert!(SweepConfig::from_overrides("bound = 1").is_err());
        assert!(SweepConfig::from_overrides("shard_count = 0").is_err());
        assert!(SweepConfig::from_overrides("bogus = 1").is_err());
    }
}
