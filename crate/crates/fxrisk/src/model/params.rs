//! Parameter records for the credit model.
//!
//! Each type validates its invariants on construction and is immutable
//! afterwards, so every function consuming one of these records can rely on
//! the invariants without re-checking. All fields are plain scalars or the
//! self-validating wrappers from [`crate::numerics::types`].

use crate::error::{Error, Result};
use crate::numerics::cholesky::CorrMatrix3;
use crate::numerics::types::{Correlation, Probability};
use crate::scalar::Real;

/// Exchange-rate dynamics over the one-year horizon.
///
/// The log FX ratio at the horizon is normal with mean `nu` and standard
/// deviation `tau`. The orientation convention: the rate is the price, in
/// the currency the debt is denominated in, of one unit of the currency the
/// assets are denominated in, so a *rising* rate strengthens the borrower.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FxParams<T> {
    nu: T,
    tau: T,
}

impl<T: Real> FxParams<T> {
    /// Creates FX parameters.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] if `nu` is not finite or `tau` is negative
    /// or not finite. `tau = 0` is allowed and means a deterministic rate.
    pub fn new(nu: T, tau: T) -> Result<Self> {
        if !nu.is_finite() {
            return Err(Error::Domain(format!(
                "FX drift must be finite, got {nu}"
            )));
        }
        if !tau.is_finite() || tau < T::zero() {
            return Err(Error::Domain(format!(
                "FX volatility must be finite and nonnegative, got {tau}"
            )));
        }
        Ok(Self { nu, tau })
    }

    /// Mean of the log FX ratio at the horizon.
    pub fn nu(&self) -> T {
        self.nu
    }

    /// Standard deviation of the log FX ratio at the horizon.
    pub fn tau(&self) -> T {
        self.tau
    }
}

/// One borrower: domestic-currency default probability, asset volatility,
/// and the correlation between the FX shock and the borrower's asset shock.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BorrowerParams<T> {
    pd: Probability<T>,
    sigma: T,
    r: Correlation<T>,
}

impl<T: Real> BorrowerParams<T> {
    /// Creates borrower parameters.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] if `sigma` is not strictly positive and
    /// finite. `pd` and `r` carry their own range guarantees.
    pub fn new(pd: Probability<T>, sigma: T, r: Correlation<T>) -> Result<Self> {
        if !sigma.is_finite() || sigma <= T::zero() {
            return Err(Error::Domain(format!(
                "asset volatility must be finite and positive, got {sigma}"
            )));
        }
        Ok(Self { pd, sigma, r })
    }

    /// Default probability before any currency adjustment.
    pub fn pd(&self) -> Probability<T> {
        self.pd
    }

    /// Asset volatility per square-root year.
    pub fn sigma(&self) -> T {
        self.sigma
    }

    /// Correlation between the FX shock and the asset shock.
    pub fn r(&self) -> Correlation<T> {
        self.r
    }
}

/// Two borrowers, their asset correlation, and the shared FX dynamics.
///
/// Construction verifies that the three pairwise correlations — FX with
/// asset 1, FX with asset 2, asset 1 with asset 2 — form a positive
/// semidefinite matrix, i.e. that a joint Gaussian with these correlations
/// exists at all. The validated matrix is kept so that simulation can
/// factor it without re-checking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairParams<T> {
    b1: BorrowerParams<T>,
    b2: BorrowerParams<T>,
    corr: CorrMatrix3<T>,
    fx: FxParams<T>,
}

impl<T: Real> PairParams<T> {
    /// Creates pair parameters, checking joint realizability.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ModelValidity`] if `(b1.r, b2.r, rho)` do not form
    /// a positive semidefinite correlation matrix; the message names the
    /// offending minor.
    pub fn new(
        b1: BorrowerParams<T>,
        b2: BorrowerParams<T>,
        rho: Correlation<T>,
        fx: FxParams<T>,
    ) -> Result<Self> {
        let corr = CorrMatrix3::new(b1.r(), b2.r(), rho)?;
        Ok(Self { b1, b2, corr, fx })
    }

    /// First borrower.
    pub fn b1(&self) -> BorrowerParams<T> {
        self.b1
    }

    /// Second borrower.
    pub fn b2(&self) -> BorrowerParams<T> {
        self.b2
    }

    /// Asset correlation between the two borrowers.
    pub fn rho(&self) -> Correlation<T> {
        self.corr.rho()
    }

    /// Shared FX dynamics.
    pub fn fx(&self) -> FxParams<T> {
        self.fx
    }

    /// The validated 3×3 correlation matrix of (FX, asset 1, asset 2).
    pub fn corr_matrix(&self) -> &CorrMatrix3<T> {
        &self.corr
    }
}

/// Output of the currency adjustment: both adjusted default probabilities
/// and the adjusted asset correlation.
///
/// Plain public fields — every component already enforces its own range,
/// so there is no compound invariant left to protect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjustedPair<T> {
    /// Adjusted default probability of borrower 1.
    pub pd1_star: Probability<T>,
    /// Adjusted default probability of borrower 2.
    pub pd2_star: Probability<T>,
    /// Adjusted asset correlation.
    pub rho_star: Correlation<T>,
}

/// Geometric Brownian motion for a borrower's assets: initial level,
/// drift, and volatility.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssetProcess<T> {
    a0: T,
    mu: T,
    sigma: T,
}

impl<T: Real> AssetProcess<T> {
    /// Creates an asset process.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] unless `a0 > 0`, `sigma > 0`, and all
    /// three parameters are finite.
    pub fn new(a0: T, mu: T, sigma: T) -> Result<Self> {
        if !a0.is_finite() || a0 <= T::zero() {
            return Err(Error::Domain(format!(
                "initial asset value must be finite and positive, got {a0}"
            )));
        }
        if !mu.is_finite() {
            return Err(Error::Domain(format!(
                "asset drift must be finite, got {mu}"
            )));
        }
        if !sigma.is_finite() || sigma <= T::zero() {
            return Err(Error::Domain(format!(
                "asset volatility must be finite and positive, got {sigma}"
            )));
        }
        Ok(Self { a0, mu, sigma })
    }

    /// Initial asset value, in the asset currency.
    pub fn a0(&self) -> T {
        self.a0
    }

    /// Drift per year.
    pub fn mu(&self) -> T {
        self.mu
    }

    /// Volatility per square-root year.
    pub fn sigma(&self) -> T {
        self.sigma
    }
}

/// Debt face value (in the debt currency) and the spot exchange rate used
/// to translate it into the asset currency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DebtSpec<T> {
    debt: T,
    f0: T,
}

impl<T: Real> DebtSpec<T> {
    /// Creates a debt specification.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] unless both values are finite and
    /// strictly positive.
    pub fn new(debt: T, f0: T) -> Result<Self> {
        if !debt.is_finite() || debt <= T::zero() {
            return Err(Error::Domain(format!(
                "debt face value must be finite and positive, got {debt}"
            )));
        }
        if !f0.is_finite() || f0 <= T::zero() {
            return Err(Error::Domain(format!(
                "spot exchange rate must be finite and positive, got {f0}"
            )));
        }
        Ok(Self { debt, f0 })
    }

    /// Face value of the debt at the horizon, in the debt currency.
    pub fn debt(&self) -> T {
        self.debt
    }

    /// Spot exchange rate at time zero.
    pub fn f0(&self) -> T {
        self.f0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prob(p: f64) -> Probability<f64> {
        Probability::new(p).unwrap()
    }

    fn corr(c: f64) -> Correlation<f64> {
        Correlation::new(c).unwrap()
    }

    #[test]
    fn fx_params_validate_tau() {
        assert!(FxParams::new(0.0, 0.1).is_ok());
        assert!(FxParams::new(-0.005, 0.0).is_ok());
        assert!(FxParams::new(0.0, -0.1).is_err());
        assert!(FxParams::new(f64::NAN, 0.1).is_err());
        assert!(FxParams::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn borrower_params_validate_sigma() {
        let pd = prob(0.01);
        let r = corr(0.0);
        assert!(BorrowerParams::new(pd, 0.2, r).is_ok());
        assert!(BorrowerParams::new(pd, 0.0, r).is_err());
        assert!(BorrowerParams::new(pd, -0.2, r).is_err());
        assert!(BorrowerParams::new(pd, f64::NAN, r).is_err());
    }

    #[test]
    fn pair_params_reject_non_psd_correlations() {
        let fx = FxParams::new(0.0, 0.1).unwrap();
        let b = |r: f64| BorrowerParams::new(prob(0.01), 0.2, corr(r)).unwrap();
        // (0.9, 0.9, -0.9) has a negative determinant.
        let err = PairParams::new(b(0.9), b(0.9), corr(-0.9), fx).unwrap_err();
        assert!(matches!(err, Error::ModelValidity(_)));
        // A mildly correlated triple is fine.
        assert!(PairParams::new(b(0.3), b(-0.2), corr(0.2), fx).is_ok());
    }

    #[test]
    fn pair_params_expose_components() {
        let fx = FxParams::new(-0.005, 0.1).unwrap();
        let b1 = BorrowerParams::new(prob(0.01), 0.2, corr(0.3)).unwrap();
        let b2 = BorrowerParams::new(prob(0.05), 0.4, corr(-0.2)).unwrap();
        let pair = PairParams::new(b1, b2, corr(0.2), fx).unwrap();
        assert_eq!(pair.b1(), b1);
        assert_eq!(pair.b2(), b2);
        assert_eq!(pair.rho().get(), 0.2);
        assert_eq!(pair.fx(), fx);
        assert_eq!(pair.corr_matrix().r1().get(), 0.3);
        assert_eq!(pair.corr_matrix().r2().get(), -0.2);
    }

    #[test]
    fn asset_process_and_debt_spec_validate_positivity() {
        assert!(AssetProcess::new(100.0, 0.05, 0.2).is_ok());
        assert!(AssetProcess::new(0.0, 0.05, 0.2).is_err());
        assert!(AssetProcess::new(100.0, f64::NAN, 0.2).is_err());
        assert!(AssetProcess::new(100.0, 0.05, 0.0).is_err());
        assert!(DebtSpec::new(50.0, 1.0).is_ok());
        assert!(DebtSpec::new(0.0, 1.0).is_err());
        assert!(DebtSpec::new(50.0, -1.0).is_err());
        assert!(DebtSpec::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn works_at_f32() {
        let fx = FxParams::new(0.0f32, 0.1).unwrap();
        let b = BorrowerParams::new(
            Probability::<f32>::new(0.01).unwrap(),
            0.2,
            Correlation::<f32>::new(0.0).unwrap(),
        )
        .unwrap();
        let pair = PairParams::new(b, b, Correlation::new(0.2).unwrap(), fx).unwrap();
        assert_eq!(pair.rho().get(), 0.2f32);
    }
}
