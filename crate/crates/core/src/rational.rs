//! Exact rational scalars.
//!
//! Every coefficient in the engine is a [`Rational`]: a normalized
//! arbitrary-precision fraction with positive denominator. Zero is `0/1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// True when the fraction is in lowest terms with a positive denominator.
pub fn is_normalized(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// Canonical text form: `p` for integers, `p/q` otherwise, lowest terms.
pub fn to_canonical(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a canonical rational string.
///
/// Only the exact output of [`to_canonical`] is accepted: no leading `+`,
/// no whitespace, no decimal point, denominator > 1 and coprime to the
/// numerator.
pub fn parse_canonical(s: &str) -> Result<Rational, Error> {
    let bad = || Error::MalformedRational(s.to_string());
    let digits = |t: &str, signed: bool| -> bool {
        let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !body.is_empty()
            && body.bytes().all(|b| b.is_ascii_digit())
            && (body == "0" || !body.starts_with('0'))
            && t != "-0"
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let numer = BigInt::from_str(num).map_err(|_| bad())?;
    match den {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            if !digits(d, false) {
                return Err(bad());
            }
            let denom = BigInt::from_str(d).map_err(|_| bad())?;
            if denom <= BigInt::one() || numer.is_zero() || !numer.gcd(&denom).is_one() {
                return Err(bad());
            }
            Ok(Rational::new_raw(numer, denom))
        }
    }
}
