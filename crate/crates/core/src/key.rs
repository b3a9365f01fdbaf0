//! Key arithmetic.
//!
//! Two key modes exist: `i64` (exact, overflow-checked) and [`FiniteF64`]
//! (IEEE doubles restricted to finite values). A run picks one mode through
//! the type parameter, so the two never mix.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A totally ordered key that supports checked addition.
pub trait Key: Copy + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn checked_sum(self, other: Self) -> Result<Self>;

    /// `a + d <= b + c`, evaluated without overflow and with the mode's
    /// tolerance (exact for integers, relative 1e-12 for floats).
    fn quadrangle_leq(a: Self, d: Self, b: Self, c: Self) -> bool;

    fn parse_key(text: &str) -> Result<Self, String>;
}

/// Adds two keys, failing on integer overflow.
pub fn checked_sum<K: Key>(a: K, b: K) -> Result<K> {
    a.checked_sum(b)
}

impl Key for i64 {
    #[inline]
    fn checked_sum(self, other: Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn quadrangle_leq(a: Self, d: Self, b: Self, c: Self) -> bool {
        a as i128 + d as i128 <= b as i128 + c as i128
    }

    fn parse_key(text: &str) -> Result<Self, String> {
        text.parse::<i64>().map_err(|e| e.to_string())
    }
}

/// Relative slack for the float quadrangle test.
pub const FLOAT_MONGE_TOLERANCE: f64 = 1e-12;

/// A finite `f64`. NaN and infinities are rejected at construction, which
/// makes the ordering total.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct FiniteF64(f64);

impl FiniteF64 {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::NonFinite(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Eq for FiniteF64 {}

impl Ord for FiniteF64 {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        // Both sides are finite, so partial_cmp never fails; total_cmp would
        // split -0.0 from 0.0.
        self.0.partial_cmp(&other.0).unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for FiniteF64 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FiniteF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for FiniteF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `{}` on f64 is the shortest round-trip representation.
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<f64> for FiniteF64 {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl FromStr for FiniteF64 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let value = s.parse::<f64>().map_err(|e| e.to_string())?;
        Self::new(value).map_err(|e| e.to_string())
    }
}

impl Key for FiniteF64 {
    #[inline]
    fn checked_sum(self, other: Self) -> Result<Self> {
        // Two finite doubles can still round to infinity.
        Self::new(self.0 + other.0)
    }

    fn quadrangle_leq(a: Self, d: Self, b: Self, c: Self) -> bool {
        let lhs = a.0 + d.0;
        let rhs = b.0 + c.0;
        let scale = lhs.abs().max(rhs.abs());
        lhs <= rhs + FLOAT_MONGE_TOLERANCE * scale
    }

    fn parse_key(text: &str) -> Result<Self, String> {
        text.parse()
    }
}
