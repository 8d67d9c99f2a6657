//! Coefficient fields and real parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Tolerance below which a floating-point parameter is treated as sitting on
/// an integer lattice point.
pub const LATTICE_TOL: f64 = 1e-9;

/// Coefficient field for the polynomial algebra.
pub trait Scalar:
    Num + Clone + fmt::Debug + fmt::Display + Send + Sync + std::ops::Neg<Output = Self> + 'static
{
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn as_f64(&self) -> f64;
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn as_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }
    fn as_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q) as f32
    }
    fn as_f64(&self) -> f64 {
        f64::from(*self)
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(v) = ToPrimitive::to_f64(q) {
        if v.is_finite() {
            return v;
        }
    }
    // numerator/denominator too large for a direct conversion
    let shift = q.numer().bits().max(q.denom().bits()) as i64 - 60;
    let scale = BigInt::one() << shift.max(0) as usize;
    let n = (q.numer() / &scale).to_f64().unwrap_or(f64::NAN);
    let d = (q.denom() / &scale).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q`, an integer, or a finite decimal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if !ip.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{ip}{fp}");
        let n = BigInt::from_str_radix(&digits, 10).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let q = Rational::new(n, d);
        return Ok(if neg { -q } else { q });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// A real parameter that stays exact while it can.
///
/// Arithmetic between two exact values is exact; anything touching a float
/// becomes a float.
#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Exact(Rational),
    Float(f64),
}

impl Real {
    pub fn int(n: i64) -> Self {
        Real::Exact(int(n))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(q) => rational_to_f64(q),
            Real::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Real::Exact(q) => Some(q),
            Real::Float(_) => None,
        }
    }

    pub fn add_rational(&self, q: &Rational) -> Real {
        match self {
            Real::Exact(p) => Real::Exact(p + q),
            Real::Float(x) => Real::Float(x + rational_to_f64(q)),
        }
    }

    pub fn add_int(&self, k: i64) -> Real {
        self.add_rational(&int(k))
    }

    pub fn add(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => Real::Exact(a + b),
            _ => Real::Float(self.to_f64() + other.to_f64()),
        }
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(-q),
            Real::Float(x) => Real::Float(-x),
        }
    }

    pub fn scale(&self, k: i64) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(q * int(k)),
            Real::Float(x) => Real::Float(x * k as f64),
        }
    }

    /// `Some(k)` when the value is the integer `k` (floats within
    /// [`LATTICE_TOL`]).
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Real::Exact(q) => {
                if q.is_integer() {
                    q.numer().to_i64()
                } else {
                    None
                }
            }
            Real::Float(x) => {
                let r = x.round();
                if (x - r).abs() < LATTICE_TOL && r.abs() < 9.0e15 {
                    Some(r as i64)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    pub fn floor(&self) -> i64 {
        match self {
            Real::Exact(q) => q.floor().numer().to_i64().expect("floor out of range"),
            Real::Float(x) => x.floor() as i64,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Real::Exact(q) => q.is_positive(),
            Real::Float(x) => *x > 0.0,
        }
    }
}

impl From<Rational> for Real {
    fn from(q: Rational) -> Self {
        Real::Exact(q)
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::Float(x)
    }
}

impl From<i64> for Real {
    fn from(n: i64) -> Self {
        Real::int(n)
    }
}

impl FromStr for Real {
    type Err = Error;

    /// Rationals and finite decimals parse exactly; anything else that `f64`
    /// accepts (exponents, `inf`) parses as a float.
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(q) = parse_rational(s) {
            return Ok(Real::Exact(q));
        }
        s.trim()
            .parse::<f64>()
            .map(Real::Float)
            .map_err(|_| Error::Parse(format!("not a real number: {s:?}")))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(q) => f.write_str(&format_rational(q)),
            Real::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Exact values serialize as `"p/q"` strings, floats as numbers.
impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Real::Exact(q) => s.serialize_str(&format_rational(q)),
            Real::Float(x) => s.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(x) => Ok(Real::Float(x)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Best rational approximation is not attempted; floats are kept as floats.
pub fn real_from_f64(x: f64) -> Real {
    match Rational::from_f64(x) {
        Some(q) if q.denom().bits() <= 16 => Real::Exact(q),
        _ => Real::Float(x),
    }
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
fn gcd_check(q: &Rational) -> bool {
    num_integer::Integer::gcd(q.numer(), q.denom()).is_one() && q.denom().is_positive()
}
