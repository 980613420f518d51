//! Scalar abstraction for the whole crate.
//!
//! Every numeric routine in this crate is generic over a floating-point
//! scalar implementing [`Real`]. The trait bundles the `num-traits`
//! capabilities the algorithms need with two crate-specific hooks:
//!
//! * [`Real::of`] converts an `f64` literal into the working scalar, so
//!   polynomial coefficients and tolerances can be written once as `f64`
//!   constants and reused at every precision;
//! * [`Real::sample_standard_normal`] draws one standard normal variate.
//!   All widths draw through the *same* `f64` sampler and then narrow, so a
//!   fixed seed produces the same underlying variate stream regardless of
//!   the scalar type.
//!
//! The crate root exports `f64`-concrete aliases for the common types, which
//! is what most downstream code should use; `f32` (or a future custom
//! scalar) is available by instantiating the generic items directly.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssignOps};
use rand::Rng;
use rand_distr::StandardNormal;

/// Floating-point scalar usable by every algorithm in this crate.
///
/// Implemented for `f32` and `f64`. The supertraits give the algorithms
/// arithmetic, comparisons, transcendental functions, and thread-safety;
/// the two methods are the only pieces `num-traits` does not provide.
pub trait Real:
    Float + FromPrimitive + NumAssignOps + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant into this scalar type, rounding to the
    /// nearest representable value.
    ///
    /// Used for algorithm coefficients and tolerances, which are maintained
    /// as `f64` literals.
    fn of(x: f64) -> Self;

    /// Draws one standard normal variate from `rng`.
    ///
    /// The draw is always performed in `f64` via the ziggurat sampler of
    /// `rand_distr::StandardNormal` and then converted, so the consumed
    /// random stream — and therefore reproducibility — is identical across
    /// scalar widths.
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Complementary error function `erfc(x) = 1 - erf(x)`.
    ///
    /// Always evaluated in `f64` through `libm` (musl lineage, accurate to a
    /// couple of ulp over the whole range, including the deep tail where
    /// `erfc` is far below `f64::EPSILON`) and then narrowed. The normal CDF
    /// is a thin wrapper over this primitive.
    fn erfc(self) -> Self;
}

impl Real for f64 {
    #[inline]
    fn of(x: f64) -> Self {
        x
    }

    #[inline]
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample::<f64, _>(StandardNormal)
    }

    #[inline]
    fn erfc(self) -> Self {
        libm::erfc(self)
    }
}

impl Real for f32 {
    #[inline]
    fn of(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample::<f64, _>(StandardNormal) as f32
    }

    #[inline]
    fn erfc(self) -> Self {
        libm::erfc(self as f64) as f32
    }
}
