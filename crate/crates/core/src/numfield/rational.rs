//! Parsing, formatting and gcd helpers for arbitrary-precision rationals.
//!
//! The wire format used throughout is `"p/q"` or `"p"` with decimal digits
//! and an optional leading minus; denominators are always positive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumFieldError;

/// Parses a rational literal of the form `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational, NumFieldError> {
    let bad = || NumFieldError::BadRationalLiteral(s.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num_s, true).ok_or_else(bad)?;
    let denom = match den_s {
        Some(d) => parse_int(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -v } else { v })
}

/// Formats a rational as `"p"` when integral, otherwise `"p/q"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The gcd of a set of rationals: the positive generator of the additive
/// group they span in `Q`, i.e. `gcd(numerators) / lcm(denominators)`.
///
/// Returns zero for an empty or all-zero input.
pub fn rational_gcd(values: &[BigRational]) -> BigRational {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        return BigRational::zero();
    }
    BigRational::new(num_gcd.abs(), den_lcm)
}

/// The lcm of the denominators of a set of rationals (1 for an empty set).
pub fn denominator_lcm(values: &[BigRational]) -> BigInt {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    lcm
}
