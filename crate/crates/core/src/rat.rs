//! Exact rational scalars and their `p/q` text form.
//!
//! All distances and coefficients in this crate are arbitrary-precision
//! rationals, so strict comparisons against class bounds are decided
//! exactly, with no tolerance.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational scalar used for every distance and coefficient.
pub type Rat = num_rational::BigRational;

/// Shorthand for `p/q`. Panics on a zero denominator; intended for literals.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for the integer `p` as a rational.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or a plain integer string. Decimal notation is rejected.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = || Error::BadRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(b) => b.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// Renders a rational as `"p/q"`, or just `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Approximate decimal value, for display only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// True iff `r` is strictly negative.
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

/// Serde adapter serializing a [`Rat`] as its `"p/q"` string form.
/// Use with `#[serde(with = "crate::rat::rat_serde")]`.
pub mod rat_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{format_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        format_rat(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        parse_rat(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_fraction_and_integer_forms() {
        assert_eq!(parse_rat("5/12").unwrap(), rat(5, 12));
        assert_eq!(parse_rat("  10 ").unwrap(), rat_int(10));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("3 / 4").unwrap(), rat(3, 4));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "0.5", "a/b", "1/2/3", "1e3"] {
            assert!(parse_rat(s).is_err(), "expected parse failure for {s:?}");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [rat(5, 12), rat_int(7), rat(-9, 4), rat_int(0)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&rat(10, 5)), "2");
    }
}
