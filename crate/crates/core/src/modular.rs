//! Floor division, the signed modular inverse, and the independent oracles
//! (extended Euclid, exhaustive search) every other module is checked against.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{Error, Integer, InverseOutcome, Result};

/// `⌊a/m⌋`, rounding toward negative infinity.
pub fn floor_div(a: &Integer, m: &Integer) -> Result<Integer> {
    if m.is_zero() {
        return Err(Error::ZeroOperand);
    }
    Ok(a.div_floor(m))
}

/// `a − m·⌊a/m⌋`.
///
/// The result carries the sign of the modulus: `0 ≤ r < m` for `m > 0` and
/// `m < r ≤ 0` for `m < 0`.
pub fn floor_mod(a: &Integer, m: &Integer) -> Result<Integer> {
    if m.is_zero() {
        return Err(Error::ZeroOperand);
    }
    Ok(a.mod_floor(m))
}

/// Infallible `floor_mod` for call sites that have already rejected `m = 0`.
pub(crate) fn fmod(a: &Integer, m: &Integer) -> Integer {
    a.mod_floor(m)
}

/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `a·x + b·y = g`.
///
/// When `a` divides `b` the certificate is `(|a|, sgn a, 0)`.
pub fn extended_gcd(a: &Integer, b: &Integer) -> Result<(Integer, Integer, Integer)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if !a.is_zero() && b.is_multiple_of(a) {
        return Ok((a.abs(), a.signum(), Integer::zero()));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::one(), Integer::zero());
    let (mut old_t, mut t) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Which value to use for inverses modulo `±1`.
///
/// Both definitions agree whenever `|m| > 1`. For `|m| = 1` the classical
/// convention returns 0, while the extended definition returns
/// `½|m|(sgn m − sgn a) + sgn a`, the only choice that keeps the reciprocity
/// identity valid at the unit moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InverseDefinition {
    #[default]
    Extended,
    ClassicalUnit,
}

/// `½|m|(sgn m − sgn a) + sgn a` for `|m| = 1`, `a ≠ 0`.
///
/// | m  | a > 0 | a < 0 |
/// |----|-------|-------|
/// | 1  | 1     | 0     |
/// | −1 | 0     | −1    |
pub(crate) fn unit_modulus_inverse(a: &Integer, m: &Integer) -> Integer {
    debug_assert!(m.abs().is_one() && !a.is_zero());
    match (m.is_positive(), a.is_positive()) {
        (true, true) => Integer::one(),
        (true, false) | (false, true) => Integer::zero(),
        (false, false) => -Integer::one(),
    }
}

/// The extended modular inverse `(a⁻¹)_m`.
///
/// * `m > 1`: the unique `x` in `1..=m-1` with `a·x ≡ 1 (mod m)`;
/// * `m < −1`: the unique `x` in `m+1..=-1` with `a·x ≡ 1 (mod m)`;
/// * `|m| = 1`: see [`InverseDefinition::Extended`].
///
/// Fails with [`Error::ZeroOperand`] when `a·m = 0` and with
/// [`Error::NotCoprime`] when `gcd(a, m) ≠ 1`.
pub fn mod_inverse(a: &Integer, m: &Integer) -> InverseOutcome {
    mod_inverse_with(InverseDefinition::Extended, a, m)
}

/// [`mod_inverse`] with a selectable convention for the unit moduli.
pub fn mod_inverse_with(def: InverseDefinition, a: &Integer, m: &Integer) -> InverseOutcome {
    if a.is_zero() || m.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if m.abs().is_one() {
        return Ok(match def {
            InverseDefinition::Extended => unit_modulus_inverse(a, m),
            InverseDefinition::ClassicalUnit => Integer::zero(),
        });
    }
    let (g, x, _) = extended_gcd(a, m)?;
    if !g.is_one() {
        return Err(Error::NotCoprime);
    }
    // x ≢ 0 (mod m) since |m| > 1, so the floor residue lands strictly inside
    // the signed window.
    Ok(fmod(&x, m))
}

/// The textbook inverse: the residue in `0..=|m|-1`, so 0 for `|m| = 1`.
///
/// Negative moduli are normalized to the residue system of `|m|`.
pub fn classical_inverse(a: &Integer, m: &Integer) -> InverseOutcome {
    if a.is_zero() || m.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let modulus = m.abs();
    if modulus.is_one() {
        return Ok(Integer::zero());
    }
    let (g, x, _) = extended_gcd(a, &modulus)?;
    if !g.is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(fmod(&x, &modulus))
}

/// Exhaustive search over the signed window of `m` for the inverse of `a`.
///
/// Never consults a gcd: `NotCoprime` is reported when no candidate works.
/// Only meant for small moduli.
pub fn brute_force_inverse(a: &Integer, m: &Integer) -> InverseOutcome {
    if a.is_zero() || m.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if m.abs() <= Integer::one() {
        return Err(Error::Domain("brute force inverse needs |m| > 1"));
    }
    let target = fmod(&Integer::one(), m);
    let step = if m.is_positive() {
        Integer::one()
    } else {
        -Integer::one()
    };
    let mut x = step.clone();
    while &x != m {
        if fmod(&(a * &x), m) == target {
            return Ok(x);
        }
        x += &step;
    }
    Err(Error::NotCoprime)
}
