//! Exact rational scalars and their `"p/q"` string form.
//!
//! Everything in this crate computes over [`Q`] (`BigRational`). Artifacts
//! serialize rationals as strings like `"3/4"` or `"-2"` so that no decimal
//! rounding ever enters a report.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational. Panics on zero denominator (programmer error).
pub fn qr(num: i64, den: i64) -> Q {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// `x^n` for natural `n`.
pub fn pow(x: &Q, n: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Renders without spaces: `"p/q"`, or just `"p"` for integers.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Approximate decimal rendering, used only for the `--decimal` convenience
/// column in reports.
pub fn to_decimal(x: &Q, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (x * BigRational::from_integer(scale.clone())).round();
    let v = scaled.numer().clone();
    let neg = v.is_negative();
    let v = v.abs();
    let (int, frac) = (v.clone() / &scale, v % &scale);
    let mut frac = frac.to_string();
    while frac.len() < digits {
        frac.insert(0, '0');
    }
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod serde_str {
    use super::{format_q, parse_q, Q};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(de::Error::custom)
    }
}
