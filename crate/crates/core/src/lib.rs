//! Signed modular arithmetic built around an extended modular-inverse
//! definition that covers negative moduli and the unit moduli `±1`.
//!
//! For coprime nonzero `a`, `b` the inverses satisfy the reciprocity identity
//!
//! ```text
//! a·(a⁻¹)_b + b·(b⁻¹)_a = 1 + a·b
//! ```
//!
//! which this crate exposes as a checker ([`recip::reciprocity_check`]), as a
//! standalone inversion algorithm ([`recip::inverse_via_reciprocity`]), and as
//! the basis of a family of derived identities ([`identities`]) and
//! Gaussian-integer inverses ([`gaussian`]).
//!
//! ```
//! use modrecip::{mod_inverse, Integer};
//!
//! let x = mod_inverse(&Integer::from(7), &Integer::from(22)).unwrap();
//! assert_eq!(x, Integer::from(19));
//! ```

pub mod bench;
pub mod cli;
mod error;
pub mod gaussian;
pub mod identities;
pub mod modular;
pub mod parse;
pub mod recip;
pub mod sweep;

pub use error::{Error, Result};
pub use gaussian::GaussianInteger;
pub use modular::{
    brute_force_inverse, classical_inverse, extended_gcd, floor_div, floor_mod, mod_inverse,
    InverseDefinition,
};
pub use recip::{inverse_via_reciprocity, reciprocity_check, solve_diophantine, ReciprocityReport};

/// Arbitrary-precision signed integer used for every scalar.
pub type Integer = num_bigint::BigInt;

/// Result of an inverse computation: the inverse, or the reason it is undefined.
pub type InverseOutcome = Result<Integer>;
