//! Helpers for exact rationals: `p/q` text form and decimal rendering.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serializer;

/// Default number of decimal places used when rendering rationals.
pub const DEFAULT_PLACES: usize = 6;

/// Renders `r` as `p/q` in lowest terms. Integers keep the `/1` suffix so the
/// format is uniform.
pub fn to_ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_ratio(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Parses a plain decimal literal such as `0.01` or `3` into an exact rational.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if neg { -value } else { value })
}

/// Rounds `r` to the nearest integer, ties to even.
pub fn round_half_even(r: &BigRational) -> BigInt {
    let floor = r.floor().to_integer();
    let frac = r - BigRational::from_integer(floor.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

/// Rounds `r` to the nearest multiple of `step` (ties to even multiples).
pub fn round_to_step(r: &BigRational, step: &BigRational) -> BigRational {
    let k = round_half_even(&(r / step));
    BigRational::from_integer(k) * step
}

/// Decimal rendering with `places` fractional digits, rounded half-to-even.
/// Presentation only: the exact value is the rational itself.
pub fn to_decimal(r: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = round_half_even(&(r * BigRational::from_integer(scale.clone())));
    let negative = scaled.sign() == Sign::Minus;
    let magnitude = scaled.abs();
    let (int_part, frac_part) = magnitude.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        out.push_str(&"0".repeat(places - frac.len()));
        out.push_str(&frac);
    }
    out
}

/// Serde adapter: serialize a rational as a `"p/q"` string.
pub fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_ratio_string(r))
}

/// Serde adapter for optional rationals.
pub fn serialize_opt_ratio<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&to_ratio_string(r)),
        None => s.serialize_none(),
    }
}

/// `numer / denom` as a rational, convenience for tests and tables.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}
