//! Exact rational numbers.
//!
//! Everything numeric in the crate is an arbitrary-precision fraction kept in
//! lowest terms. Rationals print as `p/q` (or `p` when integral), never as a
//! decimal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` reduced to lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `p`, or `-p/q`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() || t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(Error::input(format!("not a rational number: {text:?}")));
    }
    let r = Rational::from_str(t)
        .map_err(|_| Error::input(format!("not a rational number: {text:?}")))?;
    Ok(r)
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub(crate) fn ceil_to_i64(r: &Rational) -> Result<i64> {
    r.ceil()
        .to_integer()
        .to_i64()
        .ok_or(Error::Overflow("rounding a rational bound"))
}

pub(crate) fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or(Error::Overflow("converting a big integer"))
}

pub(crate) fn require_nonnegative(c: &Rational, what: &str) -> Result<()> {
    if c.is_negative() {
        return Err(Error::input(format!("{what} must be >= 0, got {c}")));
    }
    Ok(())
}

pub(crate) fn require_positive(c: &Rational, what: &str) -> Result<()> {
    if !c.is_positive() {
        return Err(Error::input(format!("{what} must be > 0, got {c}")));
    }
    Ok(())
}

/// A threshold that may be infinite, e.g. the log canonical threshold of the
/// unit ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rational),
    Infinite,
}

impl Threshold {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Threshold::Finite(r) => Some(r),
            Threshold::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Threshold::Infinite)
    }
}

impl PartialOrd for Threshold {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Threshold {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Threshold::Finite(a), Threshold::Finite(b)) => a.cmp(b),
            (Threshold::Finite(_), Threshold::Infinite) => Ordering::Less,
            (Threshold::Infinite, Threshold::Finite(_)) => Ordering::Greater,
            (Threshold::Infinite, Threshold::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(r) => write!(f, "{r}"),
            Threshold::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Serde adapter writing a rational as the string `p/q`.
pub(crate) mod as_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }
}

pub(crate) mod vec_as_string {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }
}
