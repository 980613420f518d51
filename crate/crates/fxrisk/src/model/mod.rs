//! Domain types and closed-form results: the currency adjustment of
//! default probabilities and asset correlations, the parameter-free
//! consistency relation between the adjusted and unadjusted quantities,
//! and the inverse solvers.
//!
//! Everything here is a pure function over immutable value types and safe
//! for unrestricted concurrent use.

pub mod adjust;
pub mod inverse;
pub mod params;

pub use adjust::{
    adjust_pair, adjusted_correlation, adjusted_pd, default_threshold, fx_drift_for_unit_mean,
    joint_default_probability, threshold_from_process,
};
pub use inverse::{
    consistency_check, consistency_residual, homogeneous_adjusted_correlation,
    homogeneous_implied_pd, implied_vol_ratio, ConsistencyReport,
};
pub use params::{AdjustedPair, AssetProcess, BorrowerParams, DebtSpec, FxParams, PairParams};
