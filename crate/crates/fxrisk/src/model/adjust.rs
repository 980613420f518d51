//! Forward currency adjustment: thresholds, adjusted default
//! probabilities, adjusted asset correlations, and the joint default
//! probability of an adjusted pair.
//!
//! The structural picture: a borrower defaults when its standardized asset
//! score falls below the threshold `c = Φ⁻¹(pd)`. Lending in a foreign
//! currency adds the (scaled) FX shock to that score, which inflates its
//! variance and shifts its mean; re-standardizing yields the closed forms
//! implemented here. `τ = 0` bypasses the formulas entirely so that a
//! no-FX-risk portfolio reproduces its inputs bit for bit.

use crate::error::{Error, Result};
use crate::model::params::{AdjustedPair, AssetProcess, BorrowerParams, DebtSpec, FxParams, PairParams};
use crate::numerics::bivariate::bivariate_normal_cdf;
use crate::numerics::normal::{std_normal_cdf, std_normal_quantile};
use crate::numerics::types::{Correlation, Probability};
use crate::scalar::Real;

/// Default threshold `c = Φ⁻¹(p)` of a borrower with default probability
/// `p`: the level the standardized asset score must fall below for the
/// borrower to default.
pub fn default_threshold<T: Real>(p: Probability<T>) -> T {
    std_normal_quantile(p)
}

/// Default threshold of an explicit asset process against a debt level,
/// `c = (log D − log A0 − log F0 − μ + σ²/2)/σ`.
///
/// This is the standardized distance the log asset value (translated into
/// the debt currency at the spot rate) sits above the debt at the horizon.
/// `Φ` of the result is the implied one-currency default probability, so
/// the value round-trips with [`default_threshold`].
///
/// Scaling `debt` and `f0` by the same factor leaves the result unchanged:
/// only the ratio `D/F0` — the debt expressed in the asset currency —
/// matters.
pub fn threshold_from_process<T: Real>(asset: &AssetProcess<T>, debtspec: &DebtSpec<T>) -> T {
    let half = T::of(0.5);
    let numerator = debtspec.debt().ln()
        - asset.a0().ln()
        - debtspec.f0().ln()
        - asset.mu()
        + half * asset.sigma() * asset.sigma();
    numerator / asset.sigma()
}

/// Variance of the FX-adjusted standardized score, `t² + 1 + 2rt` with
/// `t = τ/σ`, or a model-validity error when it is not strictly positive
/// (possible only at `r = −1` with `τ = σ`, where FX and asset shocks
/// cancel exactly and the score degenerates).
fn adjusted_variance<T: Real>(sigma: T, r: Correlation<T>, fx: &FxParams<T>) -> Result<T> {
    let t = fx.tau() / sigma;
    let var = t * t + T::one() + T::of(2.0) * r.get() * t;
    if var <= T::zero() {
        return Err(Error::ModelValidity(format!(
            "adjusted score variance t^2 + 1 + 2rt = {var} is not positive \
             (t = tau/sigma = {t}, r = {r}); the FX shock cancels the asset shock"
        )));
    }
    Ok(var)
}

/// Currency-adjusted default probability of a single borrower,
/// `p* = Φ((c − ν/σ)/√(τ²/σ² + 1 + 2rτ/σ))` with `c = Φ⁻¹(p)`.
///
/// With `ν = 0`, `r = 0`, `τ > 0`, and `p < 0.5`, the adjustment always
/// increases the default probability: extra variance pushes probability
/// mass across a negative threshold.
///
/// # Errors
///
/// Returns [`Error::ModelValidity`] when the adjusted score variance is
/// not positive, and [`Error::Domain`] if the adjusted probability
/// underflows to 0 or rounds to 1 (possible only for extreme `ν/σ`).
pub fn adjusted_pd<T: Real>(b: &BorrowerParams<T>, fx: &FxParams<T>) -> Result<Probability<T>> {
    if fx.tau() == T::zero() && fx.nu() == T::zero() {
        // No FX risk and no FX drift: the input PD is returned untouched.
        return Ok(b.pd());
    }
    let var = adjusted_variance(b.sigma(), b.r(), fx)?;
    let c = default_threshold(b.pd());
    let arg = (c - fx.nu() / b.sigma()) / var.sqrt();
    Probability::new(std_normal_cdf(arg)?)
}

/// Currency-adjusted asset correlation of a pair: the correlation of the
/// two FX-adjusted scores `F/σᵢ + Aᵢ`,
/// `ϱ* = (ϱ + r₂t₁ + r₁t₂ + t₁t₂)/(√(t₁²+1+2r₁t₁)·√(t₂²+1+2r₂t₂))`
/// with `tᵢ = τ/σᵢ`.
///
/// The covariance pairs each score's FX leg with the *other* score's
/// asset leg — `cov[F/σ₁, A₂] = r₂t₁` and `cov[A₁, F/σ₂] = r₁t₂` — so the
/// cross terms carry the opposite borrower's FX–asset correlation, while
/// each variance carries its own (`cov[F/σᵢ, Aᵢ] = rᵢtᵢ`).
///
/// The shared FX shock adds common variance to both scores, so for
/// uncorrelated FX (`r₁ = r₂ = 0`) the adjusted correlation always
/// dominates the original one. Whenever `(r₁, r₂, ϱ)` is jointly
/// realizable the result is a genuine correlation; it is clamped to
/// `[−1, 1]` only to absorb floating-point spill at the comonotone edge.
///
/// # Errors
///
/// Returns [`Error::ModelValidity`] when either borrower's adjusted score
/// variance is not positive.
pub fn adjusted_correlation<T: Real>(pair: &PairParams<T>) -> Result<Correlation<T>> {
    let fx = pair.fx();
    if fx.tau() == T::zero() {
        // Degenerate FX leaves the dependence structure untouched.
        return Ok(pair.rho());
    }
    let (b1, b2) = (pair.b1(), pair.b2());
    let var1 = adjusted_variance(b1.sigma(), b1.r(), &fx)?;
    let var2 = adjusted_variance(b2.sigma(), b2.r(), &fx)?;
    let t1 = fx.tau() / b1.sigma();
    let t2 = fx.tau() / b2.sigma();
    // Cross terms: the FX leg of score i pairs with the asset leg of the
    // other borrower, so t1 multiplies r2 and t2 multiplies r1.
    let cov = pair.rho().get() + b2.r().get() * t1 + b1.r().get() * t2 + t1 * t2;
    let raw = cov / (var1.sqrt() * var2.sqrt());
    Correlation::new(raw.max(-T::one()).min(T::one()))
}

/// Applies [`adjusted_pd`] to both borrowers and [`adjusted_correlation`]
/// to the pair, bundling the results.
///
/// # Errors
///
/// Propagates the component errors.
pub fn adjust_pair<T: Real>(pair: &PairParams<T>) -> Result<AdjustedPair<T>> {
    let fx = pair.fx();
    Ok(AdjustedPair {
        pd1_star: adjusted_pd(&pair.b1(), &fx)?,
        pd2_star: adjusted_pd(&pair.b2(), &fx)?,
        rho_star: adjusted_correlation(pair)?,
    })
}

/// FX drift that makes the expected FX *ratio* (not its log) equal to one:
/// `ν = −τ²/2`.
///
/// A lognormal ratio with log-mean 0 has mean `exp(τ²/2) > 1`; this is the
/// Itô correction that undoes it. Useful as a neutral default when no
/// forward-rate view is available.
///
/// # Errors
///
/// Returns [`Error::Domain`] for negative `tau`.
pub fn fx_drift_for_unit_mean<T: Real>(tau: T) -> Result<T> {
    if !tau.is_finite() || tau < T::zero() {
        return Err(Error::Domain(format!(
            "FX volatility must be finite and nonnegative, got {tau}"
        )));
    }
    Ok(-(tau * tau) * T::of(0.5))
}

/// Probability that both borrowers of an adjusted pair default,
/// `Φ₂(Φ⁻¹(p₁*), Φ⁻¹(p₂*); ϱ*)`.
///
/// Returns a plain scalar rather than a [`Probability`] because the exact
/// value can sit on a boundary: at `ϱ* = −1` with small PDs the joint
/// probability is exactly zero. The result is always within
/// `[max(0, p₁*+p₂*−1), min(p₁*, p₂*)]`.
pub fn joint_default_probability<T: Real>(adj: &AdjustedPair<T>) -> T {
    let q1 = std_normal_quantile(adj.pd1_star);
    let q2 = std_normal_quantile(adj.pd2_star);
    // Quantiles of interior probabilities are finite and rho_star is a
    // valid correlation, so the bivariate CDF cannot fail.
    bivariate_normal_cdf(q1, q2, adj.rho_star)
        .expect("bivariate CDF of finite quantiles cannot fail")
}
