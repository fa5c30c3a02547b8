//! Parsing, formatting and checked arithmetic for the exact rational scalar.
//!
//! The canonical text form is `p/q` or `p` with `q > 0` and `gcd(|p|, q) = 1`;
//! it is the scalar syntax in every file format and in CLI output. The value
//! type itself is [`num_rational::BigRational`], which maintains the canonical
//! form through construction and arithmetic.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    /// Text does not match `[-]?digits(/digits)?`; `position` is the byte
    /// offset of the first offending character.
    #[error("malformed rational {text:?} at position {position}")]
    Malformed { text: String, position: usize },
    #[error("zero denominator in rational {text:?}")]
    ZeroDenominator { text: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// Parses `p/q` or `p` into a canonical rational.
pub fn parse_rational(text: &str) -> Result<Rat, RationalError> {
    let malformed = |position: usize| RationalError::Malformed {
        text: text.to_string(),
        position,
    };

    let (numer_text, denom_text) = match text.find('/') {
        Some(slash) => (&text[..slash], Some((&text[slash + 1..], slash + 1))),
        None => (text, None),
    };

    let numer = parse_integer(numer_text, 0).map_err(malformed)?;
    let denom = match denom_text {
        Some((digits, offset)) => {
            if digits.starts_with('-') || digits.starts_with('+') {
                return Err(malformed(offset));
            }
            parse_integer(digits, offset).map_err(malformed)?
        }
        None => BigInt::from(1),
    };

    if denom.is_zero() {
        return Err(RationalError::ZeroDenominator {
            text: text.to_string(),
        });
    }
    Ok(Rat::new(numer, denom))
}

fn parse_integer(text: &str, offset: usize) -> Result<BigInt, usize> {
    let digits_start = if text.starts_with('-') { 1 } else { 0 };
    if text[digits_start..].is_empty() {
        return Err(offset + digits_start);
    }
    if let Some(bad) = text[digits_start..].find(|c: char| !c.is_ascii_digit()) {
        return Err(offset + digits_start + bad);
    }
    text.parse::<BigInt>().map_err(|_| offset)
}

/// Canonical text form: `p/q`, or just `p` when the denominator is one.
pub fn format_rational(value: &Rat) -> String {
    if value.denom() == &BigInt::from(1) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Division that reports a zero divisor instead of panicking.
pub fn try_div(lhs: &Rat, rhs: &Rat) -> Result<Rat, RationalError> {
    if rhs.is_zero() {
        return Err(RationalError::DivisionByZero);
    }
    Ok(lhs / rhs)
}

/// Multiplicative inverse, rejecting zero.
pub fn try_inv(value: &Rat) -> Result<Rat, RationalError> {
    if value.is_zero() {
        return Err(RationalError::DivisionByZero);
    }
    Ok(value.recip())
}
