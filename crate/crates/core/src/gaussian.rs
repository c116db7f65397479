//! Gaussian integers `Z[i]`, nearest-rounding Euclidean division, and
//! inverses modulo a Gaussian integer obtained from integer inverses of the
//! norms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::modular::mod_inverse;
use crate::{Error, Integer, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInteger {
    pub re: Integer,
    pub im: Integer,
}

impl GaussianInteger {
    pub fn new(re: impl Into<Integer>, im: impl Into<Integer>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re² + im²`
    pub fn norm(&self) -> Integer {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, k: &Integer) -> Self {
        GaussianInteger {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

impl From<Integer> for GaussianInteger {
    fn from(re: Integer) -> Self {
        GaussianInteger {
            re,
            im: Integer::zero(),
        }
    }
}

impl<'a> Add<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for GaussianInteger {
            type Output = GaussianInteger;
            fn $method(self, rhs: GaussianInteger) -> GaussianInteger {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        -&self
    }
}

/// Prints `a`, `bi` or `a±bi`; the imaginary coefficient is always written,
/// so `1+1i` rather than `1+i`.
impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Gaussian integer {0:?}")]
pub struct ParseGaussianError(pub String);

fn parse_signed_term(term: &str) -> Option<Integer> {
    let (negative, digits) = match term.as_bytes().first()? {
        b'-' => (true, &term[1..]),
        b'+' => (false, &term[1..]),
        _ => (false, term),
    };
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let value: Integer = digits.parse().ok()?;
    Some(if negative { -value } else { value })
}

/// Accepts `a`, `bi`, `i`, `a+bi`, `a-bi` with optional spaces.
impl FromStr for GaussianInteger {
    type Err = ParseGaussianError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseGaussianError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let Some(body) = compact.strip_suffix('i') else {
            return parse_signed_term(&compact)
                .map(GaussianInteger::from)
                .ok_or_else(err);
        };
        // split before the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => Integer::one(),
            "-" => -Integer::one(),
            other => parse_signed_term(other).ok_or_else(err)?,
        };
        let re = if re_part.is_empty() {
            Integer::zero()
        } else {
            parse_signed_term(re_part).ok_or_else(err)?
        };
        Ok(GaussianInteger { re, im })
    }
}

/// `ceil(p / q)` for `q > 0`.
fn ceil_div(p: &Integer, q: &Integer) -> Integer {
    -((-p).div_floor(q))
}

/// Nearest integer to `p / q` (`q > 0`), ties rounded toward negative infinity.
fn round_half_down(p: &Integer, q: &Integer) -> Integer {
    // ceil(p/q − ½) = ceil((2p − q) / 2q)
    ceil_div(&(p * 2 - q), &(q * 2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianDivMod {
    pub quotient: GaussianInteger,
    pub remainder: GaussianInteger,
}

/// Euclidean division in `Z[i]`.
///
/// The quotient rounds each component of `n·conj(d)/N(d)` to the nearest
/// integer with halves going toward negative infinity, so the remainder
/// satisfies `N(r) ≤ N(d)/2` and is a function of the residue class of `n`.
pub fn gaussian_divmod(n: &GaussianInteger, d: &GaussianInteger) -> Result<GaussianDivMod> {
    if d.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let norm = d.norm();
    let scaled = n * &d.conj();
    let quotient = GaussianInteger {
        re: round_half_down(&scaled.re, &norm),
        im: round_half_down(&scaled.im, &norm),
    };
    let remainder = n - &(d * &quotient);
    Ok(GaussianDivMod {
        quotient,
        remainder,
    })
}

/// True when `d` divides `n` exactly in `Z[i]`.
pub fn gaussian_divides(d: &GaussianInteger, n: &GaussianInteger) -> Result<bool> {
    Ok(gaussian_divmod(n, d)?.remainder.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianInverse {
    /// `conj(z)·(s⁻¹)_t`
    pub representative: GaussianInteger,
    /// Remainder of `representative` under [`gaussian_divmod`] by `w`.
    pub canonical: GaussianInteger,
}

struct NormPair {
    s: Integer,
    t: Integer,
}

fn norm_hypotheses(z: &GaussianInteger, w: &GaussianInteger) -> Result<NormPair> {
    if [&z.re, &z.im, &w.re, &w.im].iter().any(|v| v.is_zero()) {
        return Err(Error::Domain(
            "Gaussian inverse requires all four components nonzero",
        ));
    }
    let (s, t) = (z.norm(), w.norm());
    if s <= Integer::one() || t <= Integer::one() {
        return Err(Error::Domain("Gaussian inverse requires both norms > 1"));
    }
    if !s.gcd(&t).is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(NormPair { s, t })
}

/// Inverse of `z` modulo `w` from the integer inverse of the norms:
/// `z⁻¹ ≡ conj(z)·(s⁻¹)_t (mod w)` with `s = N(z)`, `t = N(w)` coprime.
pub fn gaussian_inverse(z: &GaussianInteger, w: &GaussianInteger) -> Result<GaussianInverse> {
    let NormPair { s, t } = norm_hypotheses(z, w)?;
    let representative = z.conj().scale(&mod_inverse(&s, &t)?);
    let canonical = gaussian_divmod(&representative, w)?.remainder;
    Ok(GaussianInverse {
        representative,
        canonical,
    })
}

/// Evaluates `z·u + w·v = 1 + z·w·conj(z)·conj(w)` with
/// `u = conj(z)·(s⁻¹)_t` and `v = conj(w)·(t⁻¹)_s`, as an exact equality.
pub fn gaussian_bezout_identity(z: &GaussianInteger, w: &GaussianInteger) -> Result<bool> {
    let NormPair { s, t } = norm_hypotheses(z, w)?;
    let u = z.conj().scale(&mod_inverse(&s, &t)?);
    let v = w.conj().scale(&mod_inverse(&t, &s)?);
    let lhs = &(z * &u) + &(w * &v);
    let rhs = &GaussianInteger::one() + &(&(z * w) * &(&z.conj() * &w.conj()));
    Ok(lhs == rhs)
}

/// Inverse of `a` modulo the Gaussian integer `a·i + b`:
/// `(a⁻¹)_b + i·(a − (b⁻¹)_a)`.
pub fn inverse_mod_gaussian_linear(a: &Integer, b: &Integer) -> Result<GaussianInteger> {
    if b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    if a.abs() <= Integer::one() {
        return Err(Error::Domain("linear Gaussian inverse requires |a| > 1"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(GaussianInteger {
        re: mod_inverse(a, b)?,
        im: a - mod_inverse(b, a)?,
    })
}
