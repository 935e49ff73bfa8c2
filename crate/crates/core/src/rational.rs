//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over arbitrary-precision rationals so
//! that ranks and nullities are exact integers, never tolerance-dependent.
//! `Rational` is always stored reduced with a positive denominator, and its
//! canonical text form is `"n"` for integers and `"n/d"` otherwise
//! (`"-3/2"` style, sign on the numerator).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if `d` is zero; intended for literals in code.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical reduced string, `"n"` or `"n/d"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalParseError {
    pub input: String,
}

impl fmt::Display for RationalParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.input)
    }
}

impl std::error::Error for RationalParseError {}

/// Parses `"n"` or `"n/d"` with a nonzero denominator, reducing the result.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let err = || RationalParseError {
        input: text.to_string(),
    };
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_text.parse().map_err(|_| err())?;
    let denom: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// True if numerator and denominator both have absolute value at most `bound`.
pub fn magnitude_within(r: &Rational, bound: u64) -> bool {
    let b = BigInt::from(bound);
    r.numer().abs() <= b && r.denom().abs() <= b
}
