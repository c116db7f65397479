//! Identities derived from reciprocity: shift invariance, the reduction
//! formulas for `(a⁻¹)_{ka±b}`, the squared-modulus inverse, and the
//! quadruple identities built from two coprime pairs `(a, b)` and `(c, d)`.
//!
//! Every operation evaluates the closed-form right-hand side. Tests and the
//! sweeps in [`crate::sweep`] compare those values with [`mod_inverse`].

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::modular::{fmod, mod_inverse, mod_inverse_with, InverseDefinition};
use crate::{Error, Integer, Result};

fn require_nonzero(values: &[&Integer]) -> Result<()> {
    if values.iter().any(|v| v.is_zero()) {
        return Err(Error::ZeroOperand);
    }
    Ok(())
}

fn require_coprime(a: &Integer, b: &Integer) -> Result<()> {
    if a.gcd(b).is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime)
    }
}

fn sgn(v: &Integer) -> Integer {
    v.signum()
}

/// `((k·a + b)⁻¹)_a` derived from `(b⁻¹)_a`.
///
/// For `|a| > 1` the inverse is unchanged by the shift. For `|a| = 1` it moves
/// by `½(sgn(ka + b) − sgn b)`.
pub fn shift_invariance(a: &Integer, b: &Integer, k: &Integer) -> Result<Integer> {
    require_nonzero(&[a, b])?;
    require_coprime(a, b)?;
    let shifted = k * a + b;
    if shifted.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let base = mod_inverse(b, a)?;
    if a.abs().is_one() {
        Ok(base + (sgn(&shifted) - sgn(b)) / 2)
    } else {
        Ok(base)
    }
}

fn reduction_checks(a: &Integer, b: &Integer, target: &Integer) -> Result<()> {
    require_nonzero(&[a, b])?;
    if a.abs().is_one() {
        return Err(Error::Domain("reduction formulas require |a| ≠ 1"));
    }
    require_coprime(a, b)?;
    if target.is_zero() {
        return Err(Error::ZeroOperand);
    }
    Ok(())
}

/// `(a⁻¹)_{ka+b} = k·(a − (b⁻¹)_a) + (a⁻¹)_b`, for `|a| ≠ 1`.
pub fn reduce_inverse_plus(a: &Integer, b: &Integer, k: &Integer) -> Result<Integer> {
    reduce_inverse_plus_with(InverseDefinition::Extended, a, b, k)
}

pub fn reduce_inverse_plus_with(
    def: InverseDefinition,
    a: &Integer,
    b: &Integer,
    k: &Integer,
) -> Result<Integer> {
    reduction_checks(a, b, &(k * a + b))?;
    let inv_b_mod_a = mod_inverse_with(def, b, a)?;
    let inv_a_mod_b = mod_inverse_with(def, a, b)?;
    Ok(k * (a - inv_b_mod_a) + inv_a_mod_b)
}

/// `(a⁻¹)_{ka−b} = k·(b⁻¹)_a − (b − (a⁻¹)_b)`, for `|a| ≠ 1`.
pub fn reduce_inverse_minus(a: &Integer, b: &Integer, k: &Integer) -> Result<Integer> {
    reduce_inverse_minus_with(InverseDefinition::Extended, a, b, k)
}

pub fn reduce_inverse_minus_with(
    def: InverseDefinition,
    a: &Integer,
    b: &Integer,
    k: &Integer,
) -> Result<Integer> {
    reduction_checks(a, b, &(k * a - b))?;
    let inv_b_mod_a = mod_inverse_with(def, b, a)?;
    let inv_a_mod_b = mod_inverse_with(def, a, b)?;
    Ok(k * inv_b_mod_a - (b - inv_a_mod_b))
}

/// Both closed forms for `((b²)⁻¹)_{a²}`, with `y = (b⁻¹)_a`:
///
/// ```text
/// ((b·y − 2)·y)²   mod a²
/// (3 − 2·b·y)·y²   mod a²
/// ```
///
/// Returns the common value, or [`Error::IdentityViolated`] if they differ.
pub fn square_inverse(a: &Integer, b: &Integer) -> Result<Integer> {
    require_nonzero(&[a, b])?;
    if a.abs() <= Integer::one() {
        return Err(Error::Domain("squared-modulus inverse requires |a| > 1"));
    }
    require_coprime(a, b)?;
    let y = mod_inverse(b, a)?;
    let a2 = a * a;
    let by = b * &y;
    let first = {
        let base = (&by - 2) * &y;
        fmod(&(&base * &base), &a2)
    };
    let second = fmod(&((Integer::from(3) - &by * 2) * &y * &y), &a2);
    if first != second {
        return Err(Error::IdentityViolated("squared-modulus forms disagree"));
    }
    Ok(first)
}

/// Inverses of the four sums of squares, computed from `y₁`, `y₄`, `x₁`, `x₄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOfSquaresInverses {
    /// `(s⁻¹)_u = (y₁·(v⁻¹)_u)_u`
    pub inv_s_mod_u: Integer,
    /// `(t⁻¹)_u = (x₁·(v⁻¹)_u)_u`
    pub inv_t_mod_u: Integer,
    /// `(s⁻¹)_v = (y₄·(u⁻¹)_v)_v`
    pub inv_s_mod_v: Integer,
    /// `(t⁻¹)_v = (x₄·(u⁻¹)_v)_v`
    pub inv_t_mod_v: Integer,
    /// Each formula value equals [`mod_inverse`] of the same operands.
    pub pass: [bool; 4],
}

/// Every quantity built from two coprime pairs `(a, b)` and `(c, d)`.
///
/// `x`, `y`, `z` are zero-indexed: `x[0]` is `x₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadPairReport {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
    /// `a·c + b·d`
    pub u: Integer,
    /// `a·d − b·c`
    pub v: Integer,
    /// `a² + b²`
    pub s: Integer,
    /// `c² + d²`
    pub t: Integer,
    pub x: [Integer; 4],
    pub y: [Integer; 4],
    pub z: [Integer; 3],
    /// `((xᵢ)⁻¹)_u = (yᵢ)_u` for i = 1, 2 and `((xᵢ)⁻¹)_v = (yᵢ)_v` for i = 3, 4.
    pub pass_co1_co2: [bool; 4],
    /// Exact expansions `xᵢ·yᵢ = 1 ± (u or v)·(…)`. For `x₄·y₄` the sign is
    /// `+`: `1 + v·((a⁻¹)_b·(c − (d⁻¹)_c) − (c⁻¹)_d·(a − (b⁻¹)_a))`.
    pub pass_products: [bool; 4],
    /// Exact `s·y₁ = v + u·z₁`, `t·x₁ = v + u·z₂`, `s·y₄ = u − v·z₁`,
    /// `t·x₄ = u + v·z₃`.
    pub pass_proof: [bool; 4],
    /// Present only from [`sum_of_squares_inverses`].
    pub sums: Option<SumOfSquaresInverses>,
}

impl QuadPairReport {
    pub fn all_pass(&self) -> bool {
        self.pass_co1_co2.iter().all(|&p| p)
            && self.pass_products.iter().all(|&p| p)
            && self.pass_proof.iter().all(|&p| p)
            && self.sums.as_ref().is_none_or(|s| s.pass.iter().all(|&p| p))
    }
}

fn residue_matches_inverse(x: &Integer, y: &Integer, m: &Integer) -> bool {
    match mod_inverse(x, m) {
        Ok(inv) => inv == fmod(y, m),
        Err(_) => false,
    }
}

/// Builds the `u, v, s, t, xᵢ, yᵢ, zᵢ` table and checks the residue identities
/// `((xᵢ)⁻¹)_u = (yᵢ)_u` (i = 1, 2) and `((xᵢ)⁻¹)_v = (yᵢ)_v` (i = 3, 4).
pub fn quad_pair_inverses(
    a: &Integer,
    b: &Integer,
    c: &Integer,
    d: &Integer,
) -> Result<QuadPairReport> {
    require_nonzero(&[a, b, c, d])?;
    require_coprime(a, b)?;
    require_coprime(c, d)?;
    let u = a * c + b * d;
    let v = a * d - b * c;
    if u.abs() <= Integer::one() || v.abs() <= Integer::one() {
        return Err(Error::Domain(
            "quadruple identities require |u| > 1 and |v| > 1",
        ));
    }
    build_report(a, b, c, d, u, v)
}

fn build_report(
    a: &Integer,
    b: &Integer,
    c: &Integer,
    d: &Integer,
    u: Integer,
    v: Integer,
) -> Result<QuadPairReport> {
    let ia_b = mod_inverse(a, b)?;
    let ib_a = mod_inverse(b, a)?;
    let ic_d = mod_inverse(c, d)?;
    let id_c = mod_inverse(d, c)?;

    // recurring "complement" terms
    let a_cb = a - &ib_a; // a − (b⁻¹)_a
    let b_ca = b - &ia_b; // b − (a⁻¹)_b
    let c_cd = c - &id_c; // c − (d⁻¹)_c
    let d_cc = d - &ic_d; // d − (c⁻¹)_d

    let x = [
        a * &id_c + b * &d_cc,
        a * &c_cd + b * &ic_d,
        a * &d_cc - b * &id_c,
        a * &ic_d - b * &c_cd,
    ];
    let y = [
        c * &a_cb + d * &ia_b,
        c * &ib_a + d * &b_ca,
        c * &b_ca - d * &ib_a,
        c * &ia_b - d * &a_cb,
    ];
    let z = [
        a * &a_cb + b * &ia_b,
        c * &id_c + d * &d_cc,
        c * &c_cd + d * &ic_d,
    ];
    let s = a * a + b * b;
    let t = c * c + d * d;

    let pass_co1_co2 = [
        residue_matches_inverse(&x[0], &y[0], &u),
        residue_matches_inverse(&x[1], &y[1], &u),
        residue_matches_inverse(&x[2], &y[2], &v),
        residue_matches_inverse(&x[3], &y[3], &v),
    ];
    let one = Integer::one();
    let pass_products = [
        &x[0] * &y[0] == &one + &u * (&ia_b * &d_cc + &id_c * &a_cb),
        &x[1] * &y[1] == &one + &u * (&ib_a * &c_cd + &ic_d * &b_ca),
        &x[2] * &y[2] == &one - &v * (&ib_a * &d_cc - &id_c * &b_ca),
        &x[3] * &y[3] == &one + &v * (&ia_b * &c_cd - &ic_d * &a_cb),
    ];
    let pass_proof = [
        &s * &y[0] == &v + &u * &z[0],
        &t * &x[0] == &v + &u * &z[1],
        &s * &y[3] == &u - &v * &z[0],
        &t * &x[3] == &u + &v * &z[2],
    ];

    Ok(QuadPairReport {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        d: d.clone(),
        u,
        v,
        s,
        t,
        x,
        y,
        z,
        pass_co1_co2,
        pass_products,
        pass_proof,
        sums: None,
    })
}

/// For positive `a, b, c, d`, `y₁` is already the inverse of `x₁` modulo `u`
/// with no reduction: `0 < y₁ < u`.
pub fn positive_case_exact(a: &Integer, b: &Integer, c: &Integer, d: &Integer) -> Result<Integer> {
    if [a, b, c, d].iter().any(|v| !v.is_positive()) {
        return Err(Error::Domain("positive case requires a, b, c, d > 0"));
    }
    require_coprime(a, b)?;
    require_coprime(c, d)?;
    let u = a * c + b * d;
    let v = a * d - b * c;
    if v.is_zero() {
        return Err(Error::Domain("positive case requires v = ad − bc ≠ 0"));
    }
    let report = build_report(a, b, c, d, u, v)?;
    let (x1, y1, u) = (&report.x[0], &report.y[0], &report.u);
    if !(y1.is_positive() && y1 < u) {
        return Err(Error::IdentityViolated("y₁ outside 0 < y₁ < u"));
    }
    if mod_inverse(x1, u)? != *y1 {
        return Err(Error::IdentityViolated(
            "y₁ is not the inverse of x₁ modulo u",
        ));
    }
    Ok(y1.clone())
}

/// [`quad_pair_inverses`] plus the inverses of `s = a² + b²` and
/// `t = c² + d²` modulo `u` and `v`; additionally requires `gcd(u, v) = 1`.
pub fn sum_of_squares_inverses(
    a: &Integer,
    b: &Integer,
    c: &Integer,
    d: &Integer,
) -> Result<QuadPairReport> {
    let mut report = quad_pair_inverses(a, b, c, d)?;
    let (u, v) = (&report.u, &report.v);
    require_coprime(u, v)?;
    let inv_v_mod_u = mod_inverse(v, u)?;
    let inv_u_mod_v = mod_inverse(u, v)?;
    let inv_s_mod_u = fmod(&(&report.y[0] * &inv_v_mod_u), u);
    let inv_t_mod_u = fmod(&(&report.x[0] * &inv_v_mod_u), u);
    let inv_s_mod_v = fmod(&(&report.y[3] * &inv_u_mod_v), v);
    let inv_t_mod_v = fmod(&(&report.x[3] * &inv_u_mod_v), v);
    let agrees =
        |value: &Integer, n: &Integer, m: &Integer| mod_inverse(n, m).as_ref() == Ok(value);
    let pass = [
        agrees(&inv_s_mod_u, &report.s, u),
        agrees(&inv_t_mod_u, &report.t, u),
        agrees(&inv_s_mod_v, &report.s, v),
        agrees(&inv_t_mod_v, &report.t, v),
    ];
    report.sums = Some(SumOfSquaresInverses {
        inv_s_mod_u,
        inv_t_mod_u,
        inv_s_mod_v,
        inv_t_mod_v,
        pass,
    });
    Ok(report)
}
