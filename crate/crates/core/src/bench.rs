//! Timing comparison of the reciprocity recursion against the
//! extended-Euclid inverse on random coprime operands.

use std::time::Instant;

use num_bigint::{BigInt, RandBigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::modular::mod_inverse;
use crate::recip::inverse_via_reciprocity;
use crate::Integer;

pub const MIN_BITS: u64 = 64;
pub const MAX_BITS: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub bit_width: u64,
    pub iterations: u64,
    pub seed: u64,
    pub median_ns_reciprocity: u64,
    pub median_ns_ext_gcd: u64,
    pub agreement_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("bit width must lie in [{MIN_BITS}, {MAX_BITS}], got {0}")]
    BitWidth(u64),
    #[error("iterations must be at least 1")]
    Iterations,
    #[error("inverse routes disagree for a = {a}, m = {m}")]
    Disagreement { a: Integer, m: Integer },
}

/// A coprime pair `(a, m)` with `|m|` exactly `bits` wide, `0 < |a| < |m|`,
/// and independent random signs.
pub fn random_coprime_pair<R: Rng>(rng: &mut R, bits: u64) -> (Integer, Integer) {
    loop {
        let mut m = rng.gen_biguint(bits);
        m.set_bit(bits - 1, true);
        let a = rng.gen_biguint_below(&m);
        if a.is_zero() || !a.gcd(&m).is_one() {
            continue;
        }
        let sign = |neg: bool| if neg { Sign::Minus } else { Sign::Plus };
        let a = BigInt::from_biguint(sign(rng.gen()), a);
        let m = BigInt::from_biguint(sign(rng.gen()), m);
        return (a, m);
    }
}

fn median(values: &mut [u64]) -> u64 {
    values.sort_unstable();
    values[values.len() / 2]
}

/// Times both inverse routes on `iterations` random pairs. A report is only
/// produced when every trial agreed.
pub fn run_bench(bits: u64, iterations: u64, seed: u64) -> Result<BenchReport, BenchError> {
    if !(MIN_BITS..=MAX_BITS).contains(&bits) {
        return Err(BenchError::BitWidth(bits));
    }
    if iterations == 0 {
        return Err(BenchError::Iterations);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut recip_ns = Vec::with_capacity(iterations as usize);
    let mut gcd_ns = Vec::with_capacity(iterations as usize);
    let mut agreement_count = 0;
    for _ in 0..iterations {
        let (a, m) = random_coprime_pair(&mut rng, bits);

        let start = Instant::now();
        let via_recip = inverse_via_reciprocity(&a, &m);
        recip_ns.push(start.elapsed().as_nanos() as u64);

        let start = Instant::now();
        let via_gcd = mod_inverse(&a, &m);
        gcd_ns.push(start.elapsed().as_nanos() as u64);

        match (via_recip, via_gcd) {
            (Ok(x), Ok(y)) if x == y => agreement_count += 1,
            _ => return Err(BenchError::Disagreement { a, m }),
        }
    }
    Ok(BenchReport {
        bit_width: bits,
        iterations,
        seed,
        median_ns_reciprocity: median(&mut recip_ns),
        median_ns_ext_gcd: median(&mut gcd_ns),
        agreement_count,
    })
}
