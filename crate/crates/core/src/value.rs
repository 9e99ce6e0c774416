//! Exact nonnegative rationals.
//!
//! Every measure value and vector component is a [`Value`]. Arithmetic is
//! checked: an `i128` overflow panics instead of silently wrapping, since a
//! wrong rational would invalidate every equality the crate decides.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Float, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

type Inner = Ratio<i128>;

/// An exact nonnegative rational in canonical reduced form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Value(Inner);

impl Value {
    pub const ZERO: Value = Value(Ratio::new_raw(0, 1));
    pub const ONE: Value = Value(Ratio::new_raw(1, 1));

    pub fn from_integer(n: u64) -> Self {
        Value(Ratio::from_integer(n as i128))
    }

    /// `numer / denom`; `None` if `denom == 0`.
    pub fn ratio(numer: u64, denom: u64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Value(Ratio::new(numer as i128, denom as i128)))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Value) -> Option<Value> {
        if other > self {
            return None;
        }
        Some(Value(self.0.checked_sub(&other.0).expect("rational overflow")))
    }

    /// Absolute difference `|self - other|`.
    pub fn abs_diff(&self, other: &Value) -> Value {
        if self >= other {
            self.checked_sub(other).unwrap()
        } else {
            other.checked_sub(self).unwrap()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational value of a finite nonnegative float.
    ///
    /// Returns `None` for negative, non-finite, or out-of-range inputs.
    pub fn from_f64(f: f64) -> Option<Value> {
        if !f.is_finite() || f < 0.0 {
            return None;
        }
        if f == 0.0 {
            return Some(Value::ZERO);
        }
        let (mantissa, exp, _) = f.integer_decode();
        let m = mantissa as i128;
        let exact = if exp >= 0 {
            2i128.checked_pow(exp as u32).and_then(|p| m.checked_mul(p)).map(Ratio::from_integer)
        } else {
            2i128.checked_pow((-exp) as u32).map(|p| Ratio::new(m, p))
        };
        exact.or_else(|| Ratio::<i128>::approximate_float(f)).map(Value)
    }

    pub fn max(self, other: Value) -> Value {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Value) -> Value {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Decimal rendering when the denominator has only factors 2 and 5,
    /// `p/q` otherwise. Always parseable by [`Value::from_str`].
    pub fn to_decimal_string(&self) -> String {
        let numer = self.numer();
        let denom = self.denom();
        if denom == 1 {
            return numer.to_string();
        }
        let mut d = denom;
        let (mut twos, mut fives) = (0u32, 0u32);
        while d % 2 == 0 {
            d /= 2;
            twos += 1;
        }
        while d % 5 == 0 {
            d /= 5;
            fives += 1;
        }
        if d != 1 {
            return format!("{numer}/{denom}");
        }
        let digits = twos.max(fives);
        let scale = match 10i128.checked_pow(digits) {
            Some(s) => s,
            None => return format!("{numer}/{denom}"),
        };
        let Some(scaled) = numer.checked_mul(scale / denom) else {
            return format!("{numer}/{denom}");
        };
        let int_part = scaled / scale;
        let frac_part = scaled % scale;
        let frac = format!("{:0width$}", frac_part, width = digits as usize);
        format!("{int_part}.{}", frac.trim_end_matches('0'))
    }
}

fn parse_unsigned(s: &str) -> Option<i128> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Value {
    type Err = Error;

    /// Accepts integers (`3`), decimals (`0.25`, `.5`), scientific
    /// notation (`1e-9`, `2.5E3`) and fractions (`1/3`).
    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse {
            location: String::new(),
            message: format!("not a nonnegative rational: {raw:?}"),
        };
        let s = raw.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p = parse_unsigned(p.trim()).ok_or_else(bad)?;
            let q = parse_unsigned(q.trim()).ok_or_else(bad)?;
            if q == 0 {
                return Err(bad());
            }
            return Ok(Value(Ratio::new(p, q)));
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(pos) => {
                let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
                (&s[..pos], exp)
            }
            None => (s, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer = parse_unsigned(&digits).ok_or_else(bad)?;
        let shift = exponent - frac_part.len() as i32;
        let ten = |k: u32| 10i128.checked_pow(k).ok_or_else(bad);
        let r = if shift >= 0 {
            let n = numer.checked_mul(ten(shift as u32)?).ok_or_else(bad)?;
            Ratio::from_integer(n)
        } else {
            Ratio::new(numer, ten((-shift) as u32)?)
        };
        Ok(Value(r))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Value({})", self.to_decimal_string())
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value(self.0.checked_add(&rhs.0).expect("rational overflow"))
    }
}

impl Mul for Value {
    type Output = Value;
    fn mul(self, rhs: Value) -> Value {
        Value(self.0.checked_mul(&rhs.0).expect("rational overflow"))
    }
}

impl Div for Value {
    type Output = Value;
    /// Panics on division by zero.
    fn div(self, rhs: Value) -> Value {
        assert!(!rhs.is_zero(), "division by zero");
        Value(self.0.checked_div(&rhs.0).expect("rational overflow"))
    }
}

impl Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::ZERO, |a, b| a + b)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::from_integer(n)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal_string())
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for parsing a literal in tests and examples.
///
/// Panics on malformed input.
pub fn v(s: &str) -> Value {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
