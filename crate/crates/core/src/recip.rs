//! The reciprocity identity `a·(a⁻¹)_b + b·(b⁻¹)_a = 1 + a·b`, both as a
//! checker and as an inversion algorithm that never runs extended Euclid.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::modular::{
    fmod, mod_inverse, mod_inverse_with, unit_modulus_inverse, InverseDefinition,
};
use crate::{Error, Integer, InverseOutcome, Result};

/// Both inverses of a coprime pair and the two sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub a: Integer,
    pub b: Integer,
    pub inv_a_mod_b: Integer,
    pub inv_b_mod_a: Integer,
    /// `a·inv_a_mod_b + b·inv_b_mod_a`
    pub lhs: Integer,
    /// `1 + a·b`
    pub rhs: Integer,
    /// Multiplier with `lhs = 1 + k·a·b`, rounded down when `lhs − 1` is not
    /// a multiple of `a·b`.
    pub k: Integer,
    pub holds: bool,
}

/// Recomputes both inverses and evaluates the reciprocity identity.
pub fn reciprocity_check(a: &Integer, b: &Integer) -> Result<ReciprocityReport> {
    reciprocity_check_with(InverseDefinition::Extended, a, b)
}

pub fn reciprocity_check_with(
    def: InverseDefinition,
    a: &Integer,
    b: &Integer,
) -> Result<ReciprocityReport> {
    let inv_a_mod_b = mod_inverse_with(def, a, b)?;
    let inv_b_mod_a = mod_inverse_with(def, b, a)?;
    let ab = a * b;
    let lhs = a * &inv_a_mod_b + b * &inv_b_mod_a;
    let rhs = Integer::one() + &ab;
    let k = (&lhs - Integer::one()).div_floor(&ab);
    let holds = lhs == rhs;
    Ok(ReciprocityReport {
        a: a.clone(),
        b: b.clone(),
        inv_a_mod_b,
        inv_b_mod_a,
        lhs,
        rhs,
        k,
        holds,
    })
}

/// `(a⁻¹)_b` computed by alternating reduction and role swap.
///
/// Each step replaces `a` by `r = a mod b` (same inverse modulo `b` while
/// `|b| > 1`), then swaps to the pair `(b, r)`. Once the modulus reaches
/// `±1` the closed form applies, and every level is recovered on the way
/// back with the exact division
/// `(r⁻¹)_b = (1 + r·b − b·(b⁻¹)_r) / r`.
pub fn inverse_via_reciprocity(a: &Integer, b: &Integer) -> InverseOutcome {
    inverse_via_reciprocity_counted(a, b).map(|(x, _)| x)
}

/// [`inverse_via_reciprocity`] that also reports the number of reduction steps.
pub fn inverse_via_reciprocity_counted(a: &Integer, b: &Integer) -> Result<(Integer, usize)> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let mut levels: Vec<(Integer, Integer)> = Vec::new();
    let mut x = a.clone();
    let mut m = b.clone();
    while !m.abs().is_one() {
        let r = fmod(&x, &m);
        if r.is_zero() {
            return Err(Error::NotCoprime);
        }
        x = std::mem::replace(&mut m, r.clone());
        levels.push((r, x.clone()));
    }
    let steps = levels.len();
    // inv = (x⁻¹)_m for the innermost pair
    let mut inv = unit_modulus_inverse(&x, &m);
    for (r, m) in levels.into_iter().rev() {
        let numerator = Integer::one() + &r * &m - &m * &inv;
        let (q, rem) = numerator.div_rem(&r);
        debug_assert!(rem.is_zero(), "inexact back-substitution");
        inv = q;
    }
    Ok((inv, steps))
}

/// Solves `a·x − k·m = 1` with `x = (a⁻¹)_m`.
pub fn solve_diophantine(a: &Integer, m: &Integer) -> Result<(Integer, Integer)> {
    let x = mod_inverse(a, m)?;
    let (k, rem) = (a * &x - Integer::one()).div_rem(m);
    debug_assert!(rem.is_zero());
    Ok((x, k))
}
