//! 3×3 correlation matrices and their Cholesky factorization.
//!
//! The joint Gaussian model of this crate lives on exactly three latent
//! variables — the standardized FX shock Z and two standardized asset
//! shocks A1, A2 — so the linear algebra is specialized to the 3×3
//! correlation matrix
//!
//! ```text
//!         ⎡ 1   r1  r2 ⎤
//!     M = ⎢ r1  1   ρ  ⎥
//!         ⎣ r2  ρ   1  ⎦
//! ```
//!
//! [`CorrMatrix3`] validates positive semidefiniteness once at
//! construction (principal minors up to a small negative tolerance, so
//! matrices that are PSD up to rounding still pass), and [`cholesky3`]
//! produces the closed-form lower-triangular factor. Rank-deficient
//! boundary matrices (a borrower perfectly correlated with the FX shock,
//! say) factor through a degenerate-pivot path instead of failing.

use crate::error::{Error, Result};
use crate::numerics::types::Correlation;
use crate::scalar::Real;

/// Negative slack allowed on principal minors: matrices that fail PSD by
/// no more than this are accepted as PSD-up-to-rounding. The floor matches
/// double precision and widens proportionally for narrower scalars.
pub(crate) fn psd_tolerance<T: Real>() -> T {
    T::of(1e-12).max(T::epsilon() * T::of(16.0))
}

/// Correlation matrix of the latent triple (Z, A1, A2), positive
/// semidefinite by construction.
///
/// `r1` and `r2` are the FX–asset correlations corr(Z, A1), corr(Z, A2);
/// `rho` is the asset–asset correlation corr(A1, A2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrMatrix3<T> {
    r1: Correlation<T>,
    r2: Correlation<T>,
    rho: Correlation<T>,
}

impl<T: Real> CorrMatrix3<T> {
    /// Validates positive semidefiniteness and builds the matrix.
    ///
    /// The check runs over the principal minors: the three 2×2 minors
    /// `1 − r1²`, `1 − r2²`, `1 − ρ²` (nonnegative already because the
    /// entries are [`Correlation`]s, but verified for completeness) and
    /// the determinant `1 − r1² − r2² − ρ² + 2·r1·r2·ρ`. Each may dip to
    /// `−tolerance` to admit rounding noise.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ModelValidity`] naming the offending minor when
    /// the matrix is not positive semidefinite.
    pub fn new(r1: Correlation<T>, r2: Correlation<T>, rho: Correlation<T>) -> Result<Self> {
        let tol = psd_tolerance::<T>();
        let one = T::one();
        let minors = [
            ("1 - r1^2", one - r1.get() * r1.get()),
            ("1 - r2^2", one - r2.get() * r2.get()),
            ("1 - rho^2", one - rho.get() * rho.get()),
        ];
        for (name, value) in minors {
            if value < -tol {
                return Err(Error::ModelValidity(format!(
                    "correlation matrix is not positive semidefinite: 2x2 minor {name} = {value} < -{tol}"
                )));
            }
        }
        let det = determinant3(r1.get(), r2.get(), rho.get());
        if det < -tol {
            return Err(Error::ModelValidity(format!(
                "correlation matrix is not positive semidefinite: determinant \
                 1 - r1^2 - r2^2 - rho^2 + 2 r1 r2 rho = {det} < -{tol} \
                 (r1 = {r1}, r2 = {r2}, rho = {rho})"
            )));
        }
        Ok(Self { r1, r2, rho })
    }

    /// corr(Z, A1).
    pub fn r1(&self) -> Correlation<T> {
        self.r1
    }

    /// corr(Z, A2).
    pub fn r2(&self) -> Correlation<T> {
        self.r2
    }

    /// corr(A1, A2).
    pub fn rho(&self) -> Correlation<T> {
        self.rho
    }

    /// Determinant of the full 3×3 matrix.
    pub fn determinant(&self) -> T {
        determinant3(self.r1.get(), self.r2.get(), self.rho.get())
    }
}

fn determinant3<T: Real>(r1: T, r2: T, rho: T) -> T {
    let one = T::one();
    let two = T::of(2.0);
    one - r1 * r1 - r2 * r2 - rho * rho + two * r1 * r2 * rho
}

/// Lower-triangular Cholesky factor L of a [`CorrMatrix3`], L·Lᵀ = M.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CholeskyFactor3<T> {
    l21: T,
    l22: T,
    l31: T,
    l32: T,
    l33: T,
}

impl<T: Real> CholeskyFactor3<T> {
    /// The factor as a full (lower-triangular) 3×3 array, row-major.
    pub fn matrix(&self) -> [[T; 3]; 3] {
        let zero = T::zero();
        [
            [T::one(), zero, zero],
            [self.l21, self.l22, zero],
            [self.l31, self.l32, self.l33],
        ]
    }

    /// Maps a triple of independent standard normals to a triple with the
    /// factored correlation structure: `(z, a1, a2) = L·(e1, e2, e3)`.
    #[inline]
    pub fn correlate(&self, e: (T, T, T)) -> (T, T, T) {
        let (e1, e2, e3) = e;
        (
            e1,
            self.l21 * e1 + self.l22 * e2,
            self.l31 * e1 + self.l32 * e2 + self.l33 * e3,
        )
    }

    /// Recomputes L·Lᵀ, for verifying reconstruction accuracy.
    pub fn reconstruct(&self) -> [[T; 3]; 3] {
        let l = self.matrix();
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in l.iter().enumerate() {
            for (j, other) in l.iter().enumerate() {
                let mut sum = T::zero();
                for k in 0..3 {
                    sum += row[k] * other[k];
                }
                out[i][j] = sum;
            }
        }
        out
    }
}

/// Closed-form Cholesky factorization of a 3×3 correlation matrix.
///
/// For strictly positive definite input the reconstruction L·Lᵀ matches
/// the input entrywise to ~1e−12 (tested over random PSD matrices).
/// Exactly rank-deficient matrices (`1 − r1² = 0`) take a degenerate-pivot
/// path — the second column collapses to zero — and reconstruct exactly,
/// because PSD validity forces `ρ = r1·r2` there. Matrices within ~√tol of
/// rank deficiency are factored without failure but reconstruct only to
/// O(√tol); that cliff is inherent to Cholesky near a zero pivot.
///
/// # Errors
///
/// Returns [`Error::ModelValidity`] if a pivot is negative beyond the PSD
/// tolerance. Unreachable through a validated [`CorrMatrix3`]; present so
/// the factorization is safe on its own terms.
pub fn cholesky3<T: Real>(m: &CorrMatrix3<T>) -> Result<CholeskyFactor3<T>> {
    let tol = psd_tolerance::<T>();
    let zero = T::zero();
    let one = T::one();
    let r1 = m.r1().get();
    let r2 = m.r2().get();
    let rho = m.rho().get();

    let l21 = r1;
    let l31 = r2;

    let l22_sq = one - r1 * r1;
    if l22_sq < -tol {
        return Err(Error::ModelValidity(format!(
            "Cholesky pivot 1 - r1^2 = {l22_sq} is negative beyond tolerance"
        )));
    }
    let l22_sq = l22_sq.max(zero);
    let l22 = l22_sq.sqrt();

    // Degenerate pivot: A1 is (up to rounding) a deterministic function of
    // Z, and PSD validity pins rho to r1·r2, so the e2 column carries
    // nothing.
    let l32 = if l22_sq <= tol {
        zero
    } else {
        (rho - r1 * r2) / l22
    };

    let l33_sq = one - l31 * l31 - l32 * l32;
    if l33_sq < -tol {
        return Err(Error::ModelValidity(format!(
            "Cholesky pivot 1 - r2^2 - l32^2 = {l33_sq} is negative beyond tolerance"
        )));
    }
    let l33 = l33_sq.max(zero).sqrt();

    Ok(CholeskyFactor3 {
        l21,
        l22,
        l31,
        l32,
        l33,
    })
}
