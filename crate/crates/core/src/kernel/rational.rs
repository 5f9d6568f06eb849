//! Exact rational scalars and their `"p/q"` wire encoding.

use dashu_int::ops::{SquareRoot, UnsignedAbs};
use dashu_int::IBig;
use dashu_ratio::RBig;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = RBig;

pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::from_parts_signed(IBig::from(numer), IBig::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Sign as -1, 0 or +1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denominator().is_one() {
        x.numerator().to_string()
    } else {
        format!("{}/{}", x.numerator(), x.denominator())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: IBig = p.trim().parse().map_err(|_| bad())?;
            let q: IBig = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::from_parts_signed(p, q))
        }
        None => {
            let p: IBig = s.parse().map_err(|_| bad())?;
            Ok(Rational::from(p))
        }
    }
}

/// Lossy conversion, only for cosmetic output such as SVG coordinates.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().value()
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numerator().unsigned_abs().sqrt();
    let d = x.denominator().sqrt();
    if (&n * &n) == x.numerator().unsigned_abs() && &(&d * &d) == x.denominator() {
        Some(Rational::from_parts(n.into(), d))
    } else {
        None
    }
}

pub(crate) mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
