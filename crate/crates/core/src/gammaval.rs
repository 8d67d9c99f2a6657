//! Sign-exact gamma functions in (sign, log-magnitude) form, with exact
//! rational values wherever the arguments allow them.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::pochhammer;
use crate::scalar::{factorial, format_rational, int, parse_rational, rat, Rational, Real};

/// Largest argument for which `Γ` of a positive integer is carried exactly.
const EXACT_FACTORIAL_LIMIT: i64 = 4000;

fn ln_two_pi() -> f64 {
    (2.0 * PI).ln()
}

/// An exact value `coeff · (2π)^two_pi_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactValue {
    pub coeff: Rational,
    pub two_pi_power: i32,
}

impl ExactValue {
    pub fn rational(q: Rational) -> Self {
        ExactValue {
            coeff: q,
            two_pi_power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    fn mul(&self, other: &ExactValue) -> ExactValue {
        ExactValue {
            coeff: &self.coeff * &other.coeff,
            two_pi_power: self.two_pi_power + other.two_pi_power,
        }
    }
}

impl fmt::Display for ExactValue {
    /// `"3/4"`, `"2*pi"`, `"5*(2*pi)^2"`, `"2*(2*pi)^-1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = format_rational(&self.coeff);
        match self.two_pi_power {
            _ if self.coeff.is_zero() => f.write_str("0"),
            0 => f.write_str(&c),
            1 if self.coeff.is_one() => f.write_str("2*pi"),
            1 => write!(f, "{c}*(2*pi)"),
            p => write!(f, "{c}*(2*pi)^{p}"),
        }
    }
}

impl std::str::FromStr for ExactValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "2*pi" {
            return Ok(ExactValue {
                coeff: int(1),
                two_pi_power: 1,
            });
        }
        if let Some((c, rest)) = s.split_once("*(2*pi)") {
            let p = match rest.strip_prefix('^') {
                Some(p) => p
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad power in {s:?}")))?,
                None if rest.is_empty() => 1,
                None => return Err(Error::Parse(format!("bad exact value {s:?}"))),
            };
            return Ok(ExactValue {
                coeff: parse_rational(c)?,
                two_pi_power: p,
            });
        }
        Ok(ExactValue::rational(parse_rational(s)?))
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A real number as `sign · exp(log_abs)`, optionally with its exact value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignedValue {
    pub sign: i8,
    /// `-inf` for zero, written as `null` in JSON.
    #[serde(with = "log_abs_serde")]
    pub log_abs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValue>,
}

mod log_abs_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NEG_INFINITY))
    }
}

fn ln_bigint(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits < 1000 {
        return v.to_f64().expect("finite").abs().ln();
    }
    let shift = bits - 64;
    let top = (v.abs() >> shift).to_f64().expect("finite");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn ln_abs_rational(q: &Rational) -> f64 {
    ln_bigint(q.numer()) - ln_bigint(q.denom())
}

impl SignedValue {
    pub fn one() -> Self {
        Self::from_rational(int(1))
    }

    pub fn zero() -> Self {
        SignedValue {
            sign: 0,
            log_abs: f64::NEG_INFINITY,
            exact: Some(ExactValue::rational(int(0))),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        SignedValue {
            sign: if q.is_negative() { -1 } else { 1 },
            log_abs: ln_abs_rational(&q),
            exact: Some(ExactValue::rational(q)),
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            return SignedValue {
                sign: 0,
                log_abs: f64::NEG_INFINITY,
                exact: Some(ExactValue::rational(int(0))),
            };
        }
        SignedValue {
            sign: if x < 0.0 { -1 } else { 1 },
            log_abs: x.abs().ln(),
            exact: None,
        }
    }

    pub fn from_real(x: &Real) -> Self {
        match x {
            Real::Exact(q) => Self::from_rational(q.clone()),
            Real::Float(v) => Self::from_f64(*v),
        }
    }

    pub(crate) fn inexact(sign: i8, log_abs: f64) -> Self {
        SignedValue {
            sign,
            log_abs,
            exact: None,
        }
    }

    /// `(2π)^p`, carried exactly.
    pub fn two_pi_pow(p: i32) -> Self {
        SignedValue {
            sign: 1,
            log_abs: p as f64 * ln_two_pi(),
            exact: Some(ExactValue {
                coeff: int(1),
                two_pi_power: p,
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_f64(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => s as f64 * self.log_abs.exp(),
        }
    }

    pub fn mul(&self, other: &SignedValue) -> SignedValue {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        SignedValue {
            sign: self.sign * other.sign,
            log_abs: self.log_abs + other.log_abs,
            exact: match (&self.exact, &other.exact) {
                (Some(a), Some(b)) => Some(a.mul(b)),
                _ => None,
            },
        }
    }

    pub fn recip(&self) -> Result<SignedValue> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(SignedValue {
            sign: self.sign,
            log_abs: -self.log_abs,
            exact: self.exact.as_ref().map(|e| ExactValue {
                coeff: e.coeff.recip(),
                two_pi_power: -e.two_pi_power,
            }),
        })
    }

    pub fn div(&self, other: &SignedValue) -> Result<SignedValue> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn neg(&self) -> SignedValue {
        SignedValue {
            sign: -self.sign,
            log_abs: self.log_abs,
            exact: self.exact.as_ref().map(|e| ExactValue {
                coeff: -e.coeff.clone(),
                two_pi_power: e.two_pi_power,
            }),
        }
    }

    /// Same sign and log-magnitudes within `tol`.
    pub fn approx_eq(&self, other: &SignedValue, tol: f64) -> bool {
        if self.sign != other.sign {
            return false;
        }
        self.sign == 0 || (self.log_abs - other.log_abs).abs() < tol
    }

    /// Exact equality with `q · (2π)^p`; `None` if this value is not exact.
    pub fn exact_equals(&self, q: &Rational, p: i32) -> Option<bool> {
        let e = self.exact.as_ref()?;
        if e.coeff.is_zero() || q.is_zero() {
            return Some(e.coeff.is_zero() && q.is_zero());
        }
        Some(e.coeff == *q && e.two_pi_power == p)
    }
}

impl fmt::Display for SignedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(e) => write!(f, "{e}"),
            None if self.sign == 0 => f.write_str("0"),
            None => write!(f, "{}exp({})", if self.sign < 0 { "-" } else { "" }, self.log_abs),
        }
    }
}

/// Non-positive integer `k` if `x` sits on a pole of `Γ`.
fn pole_index(x: &Real) -> Option<i64> {
    x.as_integer().filter(|&k| k <= 0)
}

fn positive_integer(x: &Real) -> Option<i64> {
    match x {
        Real::Exact(q) if q.is_integer() && q.is_positive() => q.numer().to_i64(),
        _ => None,
    }
}

/// Sign of `Γ(x)` for non-pole `x`, from the parity of `⌊x⌋`.
fn gamma_sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if (x.floor() as i64).is_odd() {
        // x in (-2k-1, -2k): an odd number of poles lies to the right
        -1
    } else {
        1
    }
}

fn ln_abs_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `Γ(x)` with exact sign. Poles are errors.
pub fn gamma_signed(x: &Real) -> Result<SignedValue> {
    if pole_index(x).is_some() {
        return Err(Error::Pole(format!("Gamma({x})")));
    }
    if let Some(m) = positive_integer(x).filter(|&m| m <= EXACT_FACTORIAL_LIMIT) {
        let q = Rational::from_integer(factorial(m as u64 - 1));
        return Ok(SignedValue::from_rational(q));
    }
    let v = x.to_f64();
    Ok(SignedValue::inexact(gamma_sign(v), ln_abs_gamma(v)))
}

/// `1/Γ(x)`, an entire function: exact zero at the poles of `Γ`.
pub fn recip_gamma(x: &Real) -> SignedValue {
    if pole_index(x).is_some() {
        return SignedValue::zero();
    }
    gamma_signed(x)
        .and_then(|g| g.recip())
        .expect("non-pole gamma is finite and nonzero")
}

/// `1/(Γ(z) Γ(1-z)) = sin(πz)/π`; exact when `2z` is an integer.
pub fn recip_gamma_reflected(z: &Real) -> SignedValue {
    match z {
        Real::Exact(q) => {
            let twice = q * int(2);
            if twice.is_integer() {
                if q.is_integer() {
                    return SignedValue::zero();
                }
                // z = m + 1/2: sin(πz) = (-1)^m
                let m = q.floor().numer().clone();
                let s = if m.is_even() { 1 } else { -1 };
                return SignedValue::from_rational(int(2 * s)).mul(&SignedValue::two_pi_pow(-1));
            }
            // reduce mod 2 exactly before going to floating point
            let two = int(2);
            let r = q - (q / &two).floor() * &two;
            sin_pi_over_pi(crate::scalar::rational_to_f64(&r))
        }
        Real::Float(v) => {
            if pole_index(z).is_some() || z.is_integer() {
                return SignedValue::zero();
            }
            sin_pi_over_pi(v - 2.0 * (v / 2.0).floor())
        }
    }
}

fn sin_pi_over_pi(r: f64) -> SignedValue {
    let s = (PI * r).sin();
    SignedValue::from_f64(s / PI)
}

/// `Γ(a)/Γ(b)`. Integer offsets between exact arguments go through the
/// Pochhammer symbol, which also supplies the limit when both sit on poles.
pub fn gamma_ratio(a: &Real, b: &Real) -> Result<SignedValue> {
    if let (Real::Exact(p), Real::Exact(q)) = (a, b) {
        let diff = p - q;
        if diff.is_integer() {
            return exact_ratio(p, q, &diff);
        }
    }
    match (pole_index(a), pole_index(b)) {
        (Some(i), Some(j)) => {
            // both on the lattice: integer offset, use the exact route
            exact_ratio(&int(i), &int(j), &int(i - j))
        }
        (Some(_), None) => Err(Error::Pole(format!("Gamma({a})/Gamma({b})"))),
        (None, Some(_)) => Ok(SignedValue::zero()),
        (None, None) => {
            let num = gamma_signed(a)?;
            let den = gamma_signed(b)?;
            let mut v = num.div(&den)?;
            if v.exact.is_none() {
                let (x, y) = (a.to_f64(), b.to_f64());
                v.log_abs = ln_abs_gamma(x) - ln_abs_gamma(y);
            }
            Ok(v)
        }
    }
}

fn exact_ratio(a: &Rational, b: &Rational, diff: &Rational) -> Result<SignedValue> {
    let k = diff
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Domain("offset too large".into()))?;
    if k >= 0 {
        let v = pochhammer(b, k as u32);
        Ok(SignedValue::from_rational(v))
    } else {
        let v = pochhammer(a, (-k) as u32);
        if v.is_zero() {
            return Err(Error::Pole(format!(
                "Gamma({})/Gamma({})",
                format_rational(a),
                format_rational(b)
            )));
        }
        Ok(SignedValue::from_rational(v.recip()))
    }
}

/// Product in (sign, log) space. Exactness survives only if every factor is
/// exact.
pub fn product<'a>(values: impl IntoIterator<Item = &'a SignedValue>) -> SignedValue {
    values.into_iter().fold(SignedValue::one(), |acc, v| acc.mul(v))
}

#[allow(dead_code)]
fn half() -> Rational {
    rat(1, 2)
}
