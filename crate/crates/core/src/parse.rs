//! Integer literals accepted on the command line: optional sign, then
//! decimal digits or a `0x`-prefixed hexadecimal string.

use num_bigint::BigInt;
use num_traits::Num;

use crate::Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid integer {0:?}")]
pub struct ParseIntegerError(pub String);

pub fn parse_integer(text: &str) -> Result<Integer, ParseIntegerError> {
    let err = || ParseIntegerError(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (radix, digits) = match body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
        Some(hex) => (16, hex),
        None => (10, body),
    };
    if digits.is_empty() || !digits.chars().all(|c| c.is_digit(radix)) {
        return Err(err());
    }
    let value = BigInt::from_str_radix(digits, radix).map_err(|_| err())?;
    Ok(if negative { -value } else { value })
}
