//! Arbitrary-precision rationals.
//!
//! Backed by `num_rational::BigRational`, which keeps values normalized
//! (reduced fraction, positive denominator). Text form is `a/b`, or `a`
//! for integers.

use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim().replace('\u{2212}', "-");
    Rational::from_str(&t).map_err(|_| Error::Parse(alloc::format!("bad rational `{text}`")))
}

/// `a/b` with the denominator omitted for integers.
pub fn format_rational(q: &Rational) -> alloc::string::String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Total order key helper: compares exactly, no overflow.
pub fn rat_cmp(a: &Rational, b: &Rational) -> core::cmp::Ordering {
    a.cmp(b)
}

pub fn rat_is_nonneg_integer(q: &Rational) -> bool {
    q.denom().is_one() && !q.numer().is_negative()
}

pub fn rat_to_bigint(q: &Rational) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

pub fn rat_zero() -> Rational {
    Rational::zero()
}

pub fn rat_one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let q = parse_rational("-3/6").unwrap();
        assert_eq!(format_rational(&q), "-1/2");
        let z = parse_rational("7").unwrap();
        assert_eq!(format_rational(&z), "7");
        assert!(parse_rational("x").is_err());
    }
}
