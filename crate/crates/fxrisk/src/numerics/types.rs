//! Validated numeric newtypes: probabilities and correlations.
//!
//! Both types are cheap `Copy` wrappers whose constructors enforce the
//! invariants once, so downstream formulas can assume well-formed inputs
//! instead of re-checking ranges at every call site.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A probability strictly inside the open unit interval `(0, 1)`.
///
/// The boundaries are rejected on purpose: every consumer in this crate
/// applies the normal quantile to the value, which diverges at 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability<T>(T);

impl<T: Real> Probability<T> {
    /// Validates and wraps `value`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] when `value` is NaN, infinite, or outside
    /// the open interval `(0, 1)`.
    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite() || value <= T::zero() || value >= T::one() {
            return Err(Error::Domain(format!(
                "probability must lie strictly inside (0, 1), got {value}"
            )));
        }
        Ok(Self(value))
    }

    /// Returns the underlying scalar.
    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

impl<T: Real> fmt::Display for Probability<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A correlation coefficient in the closed interval `[−1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Correlation<T>(T);

impl<T: Real> Correlation<T> {
    /// Validates and wraps `value`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] when `value` is NaN or `|value| > 1`.
    pub fn new(value: T) -> Result<Self> {
        if value.is_nan() || value.abs() > T::one() {
            return Err(Error::Domain(format!(
                "correlation must lie in [-1, 1], got {value}"
            )));
        }
        Ok(Self(value))
    }

    /// Returns the underlying scalar.
    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

impl<T: Real> fmt::Display for Correlation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
