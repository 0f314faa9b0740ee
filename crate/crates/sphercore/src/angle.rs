//! Angles stored as exact rational multiples of π when possible.

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An angle, either `(p/q)·π` exactly or a finite number of radians.
///
/// Addition, subtraction and integer scaling keep exact angles exact.
/// Anything involving a numeric operand falls back to radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    Exact(Ratio<i64>),
    Numeric(f64),
}

/// Anything that can be read as a number of radians.
pub trait Radians {
    fn radians(&self) -> f64;
}

impl Radians for f64 {
    fn radians(&self) -> f64 {
        *self
    }
}

impl Radians for Angle {
    fn radians(&self) -> f64 {
        Angle::radians(self)
    }
}

impl<T: Radians + ?Sized> Radians for &T {
    fn radians(&self) -> f64 {
        (**self).radians()
    }
}

impl Angle {
    pub const ZERO: Angle = Angle::Exact(Ratio::new_raw(0, 1));
    pub const PI: Angle = Angle::Exact(Ratio::new_raw(1, 1));

    /// `(p/q)·π`. Panics when `q == 0`.
    pub fn pi_frac(p: i64, q: i64) -> Angle {
        Angle::Exact(Ratio::new(p, q))
    }

    pub fn from_radians(x: f64) -> Angle {
        Angle::Numeric(x)
    }

    /// Numeric angle given as a multiple of π.
    pub fn from_pi_multiple(x: f64) -> Angle {
        Angle::Numeric(x * PI)
    }

    pub fn radians(&self) -> f64 {
        match self {
            Angle::Exact(r) => *r.numer() as f64 / *r.denom() as f64 * PI,
            Angle::Numeric(x) => *x,
        }
    }

    /// Value divided by π.
    pub fn pi_multiple(&self) -> f64 {
        match self {
            Angle::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Angle::Numeric(x) => x / PI,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Angle::Exact(_))
    }

    pub fn ratio(&self) -> Option<Ratio<i64>> {
        match self {
            Angle::Exact(r) => Some(*r),
            Angle::Numeric(_) => None,
        }
    }

    pub fn sin(&self) -> f64 {
        self.radians().sin()
    }

    pub fn cos(&self) -> f64 {
        self.radians().cos()
    }

    /// Equality that is exact for two exact angles and within `tol` radians otherwise.
    pub fn approx_eq(&self, other: &Angle, tol: f64) -> bool {
        match (self, other) {
            (Angle::Exact(a), Angle::Exact(b)) => a == b,
            _ => (self.radians() - other.radians()).abs() <= tol,
        }
    }

    /// Rounds a numeric angle to 12 significant digits; exact angles are untouched.
    pub fn normalized(&self) -> Angle {
        match self {
            Angle::Exact(_) => *self,
            Angle::Numeric(x) => Angle::Numeric(round_sig(*x, 12)),
        }
    }
}

/// Rounds `x` to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        match (self, rhs) {
            (Angle::Exact(a), Angle::Exact(b)) => Angle::Exact(a + b),
            _ => Angle::Numeric(self.radians() + rhs.radians()),
        }
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        self + (-rhs)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        match self {
            Angle::Exact(a) => Angle::Exact(-a),
            Angle::Numeric(x) => Angle::Numeric(-x),
        }
    }
}

impl Mul<i64> for Angle {
    type Output = Angle;
    fn mul(self, k: i64) -> Angle {
        match self {
            Angle::Exact(a) => Angle::Exact(a * k),
            Angle::Numeric(x) => Angle::Numeric(x * k as f64),
        }
    }
}

impl Div<i64> for Angle {
    type Output = Angle;
    fn div(self, k: i64) -> Angle {
        match self {
            Angle::Exact(a) => Angle::Exact(a / k),
            Angle::Numeric(x) => Angle::Numeric(x / k as f64),
        }
    }
}

impl std::iter::Sum for Angle {
    fn sum<I: Iterator<Item = Angle>>(iter: I) -> Angle {
        iter.fold(Angle::ZERO, |acc, a| acc + a)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Exact(r) if *r.numer() == 0 => write!(f, "0"),
            Angle::Exact(r) if *r.denom() == 1 => write!(f, "{} pi", r.numer()),
            Angle::Exact(r) => write!(f, "{}/{} pi", r.numer(), r.denom()),
            Angle::Numeric(x) => write!(f, "{}", round_sig(*x, 12)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse angle {0:?}")]
pub struct ParseAngleError(pub String);

impl FromStr for Angle {
    type Err = ParseAngleError;

    /// Accepts `p/q`, `p/q pi`, `p`, a decimal multiple of π such as `0.9`
    /// or `0.9pi`, and radians written as `1.2 rad`.
    fn from_str(s: &str) -> Result<Angle, ParseAngleError> {
        let err = || ParseAngleError(s.to_string());
        let t = s.trim();
        if let Some(r) = t.strip_suffix("rad") {
            let x: f64 = r.trim().parse().map_err(|_| err())?;
            return if x.is_finite() { Ok(Angle::Numeric(x)) } else { Err(err()) };
        }
        let body = t
            .strip_suffix("pi")
            .or_else(|| t.strip_suffix('π'))
            .unwrap_or(t)
            .trim();
        if body.is_empty() {
            return Ok(Angle::PI);
        }
        if let Some((p, q)) = body.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            if q == 0 {
                return Err(err());
            }
            return Ok(Angle::pi_frac(p, q));
        }
        if let Ok(p) = body.parse::<i64>() {
            return Ok(Angle::pi_frac(p, 1));
        }
        let x: f64 = body.parse().map_err(|_| err())?;
        if !x.is_finite() {
            return Err(err());
        }
        Ok(Angle::from_pi_multiple(x))
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Angle::Exact(r) => s.serialize_str(&format!("{}/{} pi", r.numer(), r.denom())),
            Angle::Numeric(x) => s.serialize_f64(round_sig(*x, 12)),
        }
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Angle, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Angle;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"p/q pi\" or a number of radians")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Angle, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Angle, E> {
                Ok(Angle::Numeric(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Angle, E> {
                Ok(Angle::Numeric(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Angle, E> {
                Ok(Angle::Numeric(v as f64))
            }
        }
        d.deserialize_any(V)
    }
}

