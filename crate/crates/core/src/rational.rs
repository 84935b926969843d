//! Big-rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn big(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-0.125"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let p = BigInt::from_str(p.trim()).ok()?;
        let q = BigInt::from_str(q.trim()).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole_val = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(whole_digits).ok()?
        };
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_val = if frac.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(frac).ok()?
        };
        let magnitude = Rational::new(whole_val * &scale + frac_val, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(text).ok().map(Rational::from_integer)
}

/// Renders `value` as a decimal string truncated (toward zero) to `digits`
/// fractional digits.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let negative = value.is_negative();
    let magnitude = value.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (magnitude.numer() * &scale).div_floor(magnitude.denom());
    let (whole, frac) = scaled.div_rem(&scale);
    let mut out = String::new();
    if negative && !(whole.is_zero() && frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let frac = frac.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', digits - frac.len()));
        out.push_str(&frac);
    }
    out
}

pub fn to_f64(value: &Rational) -> f64 {
    match (value.numer().to_f64(), value.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge operands, so scale both down before dividing.
            let shift = value.numer().bits().max(value.denom().bits()).saturating_sub(900);
            let n = (value.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (value.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient extended to a possibly negative upper argument.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial(n as u64, k as u64);
    }
    // C(-m, k) = (-1)^k C(m + k - 1, k)
    let m = (-n) as u64;
    let value = binomial(m + k as u64 - 1, k as u64);
    if k % 2 == 0 {
        value
    } else {
        -value
    }
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// A rational that serializes as its exact `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactString(pub Rational);

impl Serialize for ExactString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        value_to_rational(&value)
            .map(ExactString)
            .ok_or_else(|| de::Error::custom(format!("not an exact rational: {value}")))
    }
}

/// Integers that fit an `i64` become JSON numbers; everything else is an
/// exact `"p/q"` string.
pub fn rational_to_value(value: &Rational) -> serde_json::Value {
    if is_integral(value) {
        if let Some(small) = value.numer().to_i64() {
            return serde_json::Value::from(small);
        }
    }
    serde_json::Value::String(value.to_string())
}

pub fn value_to_rational(value: &serde_json::Value) -> Option<Rational> {
    match value {
        serde_json::Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Some(int(i))
            } else if let Some(u) = num.as_u64() {
                Some(big(BigInt::from(u)))
            } else {
                parse_rational(&num.to_string())
            }
        }
        serde_json::Value::String(text) => parse_rational(text),
        _ => None,
    }
}
