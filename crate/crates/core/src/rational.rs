//! Exact rational helpers: parsing and printing `p/q` strings, decimal
//! rendering, and dyadic square roots for the irrational quantities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default fractional bits for dyadic approximations of irrational values.
pub const DEFAULT_PRECISION_BITS: u32 = 256;

/// Environment variable overriding [`DEFAULT_PRECISION_BITS`].
pub const PRECISION_ENV: &str = "GREEDYBENCH_PRECISION_BITS";

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.125"`.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mut p: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            p = -p;
        }
        let q = num_traits::pow(BigInt::from(10u32), frac.len());
        return Ok(Rational::new(p, q));
    }
    let p: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Canonical `p/q` rendering; integers print without a denominator.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact conversion of a finite float.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Decimal rendering with `sig` significant digits (round half away from zero).
pub fn to_decimal(q: &Rational, sig: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let negative = q.is_negative();
    let a = q.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let ten = int(10);
    loop {
        let p = pow10(e);
        if a < p {
            e -= 1;
        } else if a >= &p * &ten {
            e += 1;
        } else {
            break;
        }
    }
    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let half = ratio(1, 2);
    let mut digits = (scaled + half).floor().to_integer();
    let mut exp10 = e;
    if digits.to_string().len() > sig {
        digits /= 10;
        exp10 += 1;
    }
    let mut s = digits.to_string();
    let point = exp10 + 1; // digits before the decimal point
    if point <= 0 {
        s = format!("0.{}{}", "0".repeat((-point) as usize), s);
    } else if point as usize >= s.len() {
        s.push_str(&"0".repeat(point as usize - s.len()));
    } else {
        s.insert(point as usize, '.');
    }
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if negative {
        format!("-{s}")
    } else {
        s
    }
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10u32), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// floor(sqrt(x) * 2^bits) / 2^bits for x >= 0.
pub fn sqrt_dyadic(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "square root of a negative rational");
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (x.numer() * scale).div_floor(x.denom());
    let root = scaled.sqrt();
    Rational::new(root, BigInt::one() << bits as usize)
}

/// Precision for irrational paths, honouring `GREEDYBENCH_PRECISION_BITS`.
pub fn precision_bits() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&b| b >= 64)
        .unwrap_or(DEFAULT_PRECISION_BITS)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn max_of<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    values.into_iter().max().cloned()
}

/// Serde adapter storing a rational as a `"p/q"` string. Deserialization
/// also accepts JSON numbers.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => {
                return Err(serde::de::Error::custom(format!("expected a rational, got {other}")))
            }
        };
        super::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// `serialize_with` form of [`serde_str`].
pub fn serialize<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde_str::serialize(q, s)
}

/// Serializes a list of rationals as `"p/q"` strings.
pub fn serialize_vec<S: serde::Serializer>(
    values: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(format))
}
