//! Consistency diagnostics and inverse solvers.
//!
//! The forward adjustment maps `(p₁, p₂, ϱ, σᵢ, τ)` to `(p₁*, p₂*, ϱ*)`.
//! Remarkably, the five observables alone must satisfy one parameter-free
//! relation when the FX shock is uncorrelated with both asset shocks: the
//! volatilities drop out entirely. This module evaluates that relation as
//! a residual, reports it as an interpretable gap in ϱ*, and solves the
//! forward map backwards — for the FX-to-asset volatility ratio implied by
//! a PD pair, for the adjusted correlation implied by a PD pair, and for
//! the adjusted PD implied by a correlation pair.
//!
//! All operations here restrict probabilities to (0, 0.5): the relations
//! divide by thresholds and take square roots of `c²/q*² − 1`, which is
//! only sign-unambiguous while thresholds are negative.

use crate::error::{Error, Result};
use crate::numerics::normal::{std_normal_cdf, std_normal_quantile};
use crate::numerics::types::{Correlation, Probability};
use crate::scalar::Real;

/// Checks `p < 0.5` and returns the (negative) threshold `Φ⁻¹(p)`.
fn sub_median_threshold<T: Real>(p: Probability<T>, name: &str) -> Result<T> {
    if p.get() >= T::of(0.5) {
        return Err(Error::Domain(format!(
            "{name} = {p} must lie in (0, 0.5): the consistency relations \
             assume strictly negative default thresholds"
        )));
    }
    Ok(std_normal_quantile(p))
}

/// Threshold ratio `c/q*` for one borrower, with its precondition check.
///
/// `p_star ≥ p` (equivalently `c²/q*² ≥ 1`) must hold: with uncorrelated
/// FX the adjustment can only increase a sub-median PD.
fn threshold_ratio<T: Real>(
    p: Probability<T>,
    p_star: Probability<T>,
    index: usize,
) -> Result<T> {
    let c = sub_median_threshold(p, &format!("p{index}"))?;
    let q = sub_median_threshold(p_star, &format!("p{index}_star"))?;
    if p_star.get() < p.get() {
        return Err(Error::Domain(format!(
            "p{index}_star = {p_star} is below p{index} = {p}: uncorrelated \
             FX risk cannot decrease a sub-median default probability"
        )));
    }
    Ok(c / q)
}

/// Residual of the parameter-free consistency relation,
/// `ϱ*·(c₁/q₁*)(c₂/q₂*) − ϱ − √(c₁²/q₁*²−1)·√(c₂²/q₂*²−1)`
/// with `cᵢ = Φ⁻¹(pᵢ)` and `qᵢ* = Φ⁻¹(pᵢ*)`.
///
/// Zero (up to rounding) exactly when the five observables are produced by
/// the forward adjustment with `ν = 0` and `r₁ = r₂ = 0`; the magnitude
/// measures how far the observables are from any such explanation.
///
/// # Errors
///
/// Returns [`Error::Domain`] when any probability is outside (0, 0.5) or
/// when `pᵢ* < pᵢ`, which no uncorrelated-FX parameterization can produce.
pub fn consistency_residual<T: Real>(
    p1: Probability<T>,
    p2: Probability<T>,
    p1s: Probability<T>,
    p2s: Probability<T>,
    rho: Correlation<T>,
    rho_star: Correlation<T>,
) -> Result<T> {
    let k1 = threshold_ratio(p1, p1s, 1)?;
    let k2 = threshold_ratio(p2, p2s, 2)?;
    // k² ∈ [1, 2) here, so k² − 1 is computed exactly (Sterbenz).
    let e1 = (k1 * k1 - T::one()).max(T::zero());
    let e2 = (k2 * k2 - T::one()).max(T::zero());
    Ok(rho_star.get() * k1 * k2 - rho.get() - e1.sqrt() * e2.sqrt())
}

/// A consistency residual together with its interpretable rescaling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyReport<T> {
    /// Raw residual of the consistency relation.
    pub residual: T,
    /// Residual divided by `(c₁c₂)/(q₁*q₂*)`. The relation is linear in
    /// ϱ*, so this equals `ϱ*_supplied − ϱ*_implied`: the correlation
    /// error in natural units.
    pub implied_rho_star_gap: T,
}

/// Evaluates [`consistency_residual`] and rescales it into an implied-ϱ*
/// gap.
///
/// # Errors
///
/// Same as [`consistency_residual`].
pub fn consistency_check<T: Real>(
    p1: Probability<T>,
    p2: Probability<T>,
    p1s: Probability<T>,
    p2s: Probability<T>,
    rho: Correlation<T>,
    rho_star: Correlation<T>,
) -> Result<ConsistencyReport<T>> {
    let residual = consistency_residual(p1, p2, p1s, p2s, rho, rho_star)?;
    let k1 = threshold_ratio(p1, p1s, 1)?;
    let k2 = threshold_ratio(p2, p2s, 2)?;
    Ok(ConsistencyReport {
        residual,
        implied_rho_star_gap: residual / (k1 * k2),
    })
}

/// FX-to-asset volatility ratio `t = τ/σ` implied by a PD pair
/// `(p, p*)` and an FX-asset correlation `r`, assuming `ν = 0`.
///
/// Solves `Φ⁻¹(p*) = Φ⁻¹(p)/√(t² + 1 + 2rt)` for `t`, taking the larger
/// quadratic root `t = −r + √(r² − 1 + c²/q*²)`. A volatility ratio is
/// necessarily nonnegative; for `r = 0` and `p* > p` the nonnegative root
/// is unique.
///
/// Round trip: [`crate::model::adjust::adjusted_pd`] with `σ = 1`,
/// `τ = t`, this `r`, and `ν = 0` recovers `p*`.
///
/// # Errors
///
/// * [`Error::Domain`] when `p = 0.5` (the threshold is zero and carries
///   no scale information) or either probability is outside (0, 0.5);
/// * [`Error::NoSolution`] when the discriminant is negative or the larger
///   root is still negative — both meaning no nonnegative `t` can map `p`
///   to `p*` under this `r`.
pub fn implied_vol_ratio<T: Real>(
    p: Probability<T>,
    p_star: Probability<T>,
    r: Correlation<T>,
) -> Result<T> {
    if p.get() == T::of(0.5) {
        return Err(Error::Domain(
            "p = 0.5 has a degenerate (zero) threshold; the volatility ratio \
             is undefined"
                .to_string(),
        ));
    }
    let c = sub_median_threshold(p, "p")?;
    let q = sub_median_threshold(p_star, "p_star")?;
    let k = c / q;
    // Group as r² + (k² − 1): k² − 1 is exact for k² ∈ [0.5, 2], which
    // keeps the fixed point p* = p at a clean discriminant of r².
    let disc = r.get() * r.get() + (k * k - T::one());
    if disc < T::zero() {
        return Err(Error::NoSolution(format!(
            "no nonnegative volatility ratio maps p = {p} to p_star = {p_star} \
             with r = {r}: discriminant {disc} is negative"
        )));
    }
    let t = -r.get() + disc.sqrt();
    if t < T::zero() {
        return Err(Error::NoSolution(format!(
            "largest root t = {t} is negative: p_star = {p_star} cannot be \
             reached from p = {p} with a nonnegative volatility ratio at r = {r}"
        )));
    }
    Ok(t)
}

/// Adjusted asset correlation implied by a homogeneous PD pair,
/// `ϱ* = 1 − (1−ϱ)·Φ⁻¹(p*)²/Φ⁻¹(p)²`.
///
/// This is the two-sided symmetric special case of the consistency
/// relation (`p₁ = p₂ = p`, `p₁* = p₂* = p*`) solved for ϱ*; it agrees
/// with the covariance-based forward formula for homogeneous pairs with
/// `ν = 0`, `r = 0`.
///
/// # Errors
///
/// Returns [`Error::Domain`] when a probability is outside (0, 0.5), when
/// `p_star < p`, or when `rho = 1` (the relation pivots on `1 − ϱ`).
pub fn homogeneous_adjusted_correlation<T: Real>(
    p: Probability<T>,
    rho: Correlation<T>,
    p_star: Probability<T>,
) -> Result<Correlation<T>> {
    if rho.get() >= T::one() {
        return Err(Error::Domain(
            "rho = 1 leaves no idiosyncratic variance to rescale; the \
             homogeneous relation requires rho < 1"
                .to_string(),
        ));
    }
    let c = sub_median_threshold(p, "p")?;
    let q = sub_median_threshold(p_star, "p_star")?;
    if p_star.get() == p.get() {
        // Fixed point: return the input correlation bit for bit.
        return Ok(rho);
    }
    if p_star.get() < p.get() {
        return Err(Error::Domain(format!(
            "p_star = {p_star} is below p = {p}: uncorrelated FX risk cannot \
             decrease a sub-median default probability"
        )));
    }
    let ratio = (q * q) / (c * c);
    Correlation::new(T::one() - (T::one() - rho.get()) * ratio)
}

/// Adjusted default probability implied by a correlation pair,
/// `p* = Φ(−|Φ⁻¹(p)|·√((1−ϱ*)/(1−ϱ)))` — the homogeneous relation run in
/// the other direction.
///
/// Round-trips with [`homogeneous_adjusted_correlation`].
///
/// # Errors
///
/// Returns [`Error::Domain`] when `p` is outside (0, 0.5), when
/// `rho_star < rho`, or when `rho_star ≥ 1`.
pub fn homogeneous_implied_pd<T: Real>(
    p: Probability<T>,
    rho: Correlation<T>,
    rho_star: Correlation<T>,
) -> Result<Probability<T>> {
    if rho_star.get() >= T::one() {
        return Err(Error::Domain(format!(
            "rho_star = {rho_star} must be below 1: the implied PD reaches \
             the 0.5 boundary in that limit"
        )));
    }
    if rho_star.get() < rho.get() {
        return Err(Error::Domain(format!(
            "rho_star = {rho_star} is below rho = {rho}: a common FX shock \
             cannot decrease the asset correlation"
        )));
    }
    let c = sub_median_threshold(p, "p")?;
    if rho_star.get() == rho.get() {
        // Fixed point: return the input PD bit for bit.
        return Ok(p);
    }
    let shrink = ((T::one() - rho_star.get()) / (T::one() - rho.get())).sqrt();
    Probability::new(std_normal_cdf(-c.abs() * shrink)?)
}
