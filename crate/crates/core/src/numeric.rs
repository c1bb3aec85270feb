//! Scalar abstraction for series accumulation. Exact combinatorial inputs are
//! rationals; sums can then run in `f32`/`f64` or stay exact, behind the same
//! code path.

use crate::Rat;
use num::{BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::ops::{Add, Div, Mul, Sub};

/// Accumulator scalar for series evaluation. `Zero`/`One`/`Signed` supply
/// `zero()`, `one()`, `is_zero()` and `abs()`; the conversions are the only
/// methods added here.
pub trait SeriesScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + Signed
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Convert an exact rational input (exact for rational scalars).
    fn from_rat(q: &Rat) -> Self;
    /// Convert a binary float (exact: floats are dyadic rationals).
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact representation, when the scalar carries one (rational
    /// accumulators return `Some`, floats `None`).
    fn exact_repr(&self) -> Option<String> {
        None
    }
}

impl SeriesScalar for f64 {
    fn from_rat(q: &Rat) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl SeriesScalar for f32 {
    fn from_rat(q: &Rat) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN) as f32
    }
    fn from_f64(x: f64) -> Self {
        x as f32
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl SeriesScalar for BigRational {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn from_f64(x: f64) -> Self {
        <BigRational as FromPrimitive>::from_f64(x).unwrap_or_else(<BigRational as Zero>::zero)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn exact_repr(&self) -> Option<String> {
        Some(self.to_string())
    }
}

/// How series are accumulated: `Double` sums in `f64`; `Extended` sums in
/// exact rational arithmetic and rounds once at the end.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    Double,
    Extended,
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Precision::Double => write!(f, "double"),
            Precision::Extended => write!(f, "extended"),
        }
    }
}

impl std::str::FromStr for Precision {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "double" => Ok(Precision::Double),
            "extended" => Ok(Precision::Extended),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown precision {other:?} (expected double or extended)"
            ))),
        }
    }
}
