//! Closed-form FX adjustments of default probabilities and asset
//! correlations, with consistency diagnostics, inverse solvers, and a
//! Monte Carlo cross-check.
//!
//! # Model
//!
//! A borrower defaults when its asset value, translated into the debt
//! currency, falls below its debt at the one-year horizon. Assets follow
//! geometric Brownian motion; the FX rate — quoted as the price in debt
//! currency of one unit of asset currency — is lognormal with log-mean
//! `ν` and log-volatility `τ`. Standardizing the log default condition
//! yields closed forms for
//!
//! * the FX-adjusted default probability of a single borrower
//!   ([`model::adjusted_pd`]),
//! * the FX-adjusted asset correlation of a borrower pair
//!   ([`model::adjusted_correlation`]),
//! * a parameter-free consistency condition linking observed and
//!   adjusted quantities ([`model::consistency_check`]), and
//! * inverse solvers recovering latent parameters from observed ones
//!   ([`model::implied_vol_ratio`], [`model::homogeneous_implied_pd`]).
//!
//! The [`simulation`] module estimates the same observables by direct
//! sampling — either of the one-period latent variables or of full GBM
//! paths — and serves as an independent oracle for every closed form.
//!
//! # Example
//!
//! Adjusting a homogeneous pair — both borrowers with a 1% default
//! probability and asset volatility 0.2, asset correlation 0.2 — for a
//! driftless FX rate with 10% volatility:
//!
//! ```
//! use fxrisk::{model, BorrowerParams64, Correlation64, FxParams64, PairParams64, Probability64};
//!
//! # fn main() -> fxrisk::Result<()> {
//! let fx = FxParams64::new(0.0, 0.1)?;
//! let b = BorrowerParams64::new(Probability64::new(0.01)?, 0.2, Correlation64::new(0.0)?)?;
//! let pair = PairParams64::new(b, b, Correlation64::new(0.2)?, fx)?;
//! let adj = model::adjust_pair(&pair)?;
//!
//! assert!((adj.pd1_star.get() - 0.018728452655812494).abs() <= 1e-15);
//! assert!((adj.rho_star.get() - 0.36).abs() <= 1e-15);
//! # Ok(())
//! # }
//! ```
//!
//! # Scalar genericity
//!
//! All numerics are generic over the floating-point scalar through
//! [`scalar::Real`] (`f64`, `f32`, …). The accuracy contracts of the
//! [`numerics`] layer are stated for `f64`; narrower types evaluate the
//! same algorithms at their own precision. The crate root exposes `f64`
//! aliases for the common types so downstream code that does not care
//! about genericity never spells out a type parameter.
//!
//! # Conventions
//!
//! * Probabilities of default live in the open interval `(0, 1)`;
//!   operations tied to the sub-median regime additionally require
//!   `p < 0.5` and say so in their contracts.
//! * `ν` is the mean of the one-year log FX ratio. A unit-mean FX rate
//!   (no systematic drift in levels) corresponds to `ν = −τ²/2`, see
//!   [`model::fx_drift_for_unit_mean`].
//! * All randomness is seeded explicitly and partitioned into fixed
//!   blocks, so simulation results are bit-reproducible across runs and
//!   thread counts.

pub mod error;
pub mod model;
pub mod numerics;
pub mod scalar;
pub mod simulation;

pub use error::{Error, Result};

/// `f64` probability of default in `(0, 1)`.
pub type Probability64 = numerics::types::Probability<f64>;
/// `f64` correlation in `[-1, 1]`.
pub type Correlation64 = numerics::types::Correlation<f64>;
/// `f64` FX log-drift and log-volatility.
pub type FxParams64 = model::FxParams<f64>;
/// `f64` single-borrower parameters.
pub type BorrowerParams64 = model::BorrowerParams<f64>;
/// `f64` borrower-pair parameters.
pub type PairParams64 = model::PairParams<f64>;
/// `f64` FX-adjusted pair quantities.
pub type AdjustedPair64 = model::AdjustedPair<f64>;
/// `f64` GBM asset-process parameters.
pub type AssetProcess64 = model::AssetProcess<f64>;
/// `f64` debt level and FX spot.
pub type DebtSpec64 = model::DebtSpec<f64>;
/// `f64` three-factor correlation matrix.
pub type CorrMatrix64 = numerics::cholesky::CorrMatrix3<f64>;
/// `f64` consistency-check report.
pub type ConsistencyReport64 = model::ConsistencyReport<f64>;
/// `f64` simulation estimates.
pub type SimResult64 = simulation::SimResult<f64>;
