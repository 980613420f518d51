//! Bivariate standard normal distribution function.
//!
//! Computes Φ₂(x, y; ρ) = P[X ≤ x, Y ≤ y] for standard normal (X, Y) with
//! correlation ρ, by the Drezner–Wesolowsky single-integral method in
//! Genz's refined formulation: for moderate |ρ| a Gauss–Legendre
//! quadrature after the arcsine substitution, and for |ρ| > 0.925 an
//! asymptotic expansion around |ρ| = 1 plus a quadrature over the residual.
//! A fixed 20-point rule is used in both regimes — the reference Fortran
//! picks 6/12/20 points by |ρ|, but the largest rule is uniformly at least
//! as accurate and keeps the evaluation count input-independent.
//!
//! Accuracy is about 5e−16 absolute over the whole parameter range,
//! validated against an arbitrary-precision quadrature oracle including
//! the delicate ρ < −0.925 region (where a sign slip in the reduction
//! `k → −k, hk → −hk` of the original algorithm is easy to introduce and
//! costs ten orders of magnitude).
//!
//! The |ρ| = 1 boundaries short-circuit to the analytic limits
//! min(Φ(x), Φ(y)) and max(0, Φ(x) + Φ(y) − 1).

use crate::error::{Error, Result};
use crate::numerics::normal::{norm_cdf_raw, SQRT_2PI};
use crate::numerics::types::Correlation;
use crate::scalar::Real;

/// 20-point Gauss–Legendre rule on [−1, 1]: (weight, abscissa) for the
/// negative half; the loop evaluates each node at 1 − x and 1 + x.
/// Transcribed verbatim from the published table, including digits
/// beyond `f64` round-trip precision.
#[allow(clippy::excessive_precision)]
const GAUSS_LEGENDRE_20: [(f64, f64); 10] = [
    (0.1761400713915212e-01, -0.9931285991850949),
    (0.4060142980038694e-01, -0.9639719272779138),
    (0.6267204833410906e-01, -0.9122344282513259),
    (0.8327674157670475e-01, -0.8391169718222188),
    (0.1019301198172404e+00, -0.7463319064601508),
    (0.1181945319615184e+00, -0.6360536807265150),
    (0.1316886384491766e+00, -0.5108670019508271),
    (0.1420961093183821e+00, -0.3737060887154196),
    (0.1491729864726037e+00, -0.2277858511416451),
    (0.1527533871307259e+00, -0.7652652113349733e-01),
];

/// Bivariate standard normal CDF Φ₂(x, y; ρ) = P[X ≤ x, Y ≤ y].
///
/// Nondecreasing in `x`, `y`, and `rho`; reduces to the product
/// Φ(x)·Φ(y) at ρ = 0 and to the analytic comonotone/countermonotone
/// limits at ρ = ±1; result clamped to [0, 1].
///
/// # Errors
///
/// Returns [`Error::Domain`] when `x` or `y` is NaN or infinite.
pub fn bivariate_normal_cdf<T: Real>(x: T, y: T, rho: Correlation<T>) -> Result<T> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!(
            "bivariate normal CDF requires finite arguments, got ({x}, {y})"
        )));
    }
    let r = rho.get();
    let one = T::one();
    if r == one {
        return Ok(norm_cdf_raw(x).min(norm_cdf_raw(y)));
    }
    if r == -one {
        return Ok((norm_cdf_raw(x) + norm_cdf_raw(y) - one).max(T::zero()));
    }
    // P[X ≤ x, Y ≤ y] = P[X > −x, Y > −y] by central symmetry.
    Ok(upper_tail(-x, -y, r).max(T::zero()).min(one))
}

/// Genz's `bvnd`: P[X > dh, Y > dk] for |r| < 1.
fn upper_tail<T: Real>(dh: T, dk: T, r: T) -> T {
    let zero = T::zero();
    let one = T::one();
    let half = T::of(0.5);
    let two_pi = T::of(std::f64::consts::TAU);

    let h = dh;
    let mut k = dk;
    let mut hk = h * k;
    let mut bvn = zero;

    if r.abs() <= T::of(0.925) {
        if r.abs() > zero {
            let hs = (h * h + k * k) * half;
            let asr = half * r.asin();
            for &(w, xq) in GAUSS_LEGENDRE_20.iter() {
                for &is in &[-1.0, 1.0] {
                    let sn = (asr * (T::of(is) * T::of(xq) + one)).sin();
                    bvn += T::of(w) * ((sn * hk - hs) / (one - sn * sn)).exp();
                }
            }
            bvn = bvn * asr / two_pi;
        }
        bvn + norm_cdf_raw(-h) * norm_cdf_raw(-k)
    } else {
        // |r| > 0.925: reduce negative r to positive via k → −k (which
        // also negates hk), expand around |r| = 1, then quadrature over
        // the remainder. The k/hk pair must flip together.
        if r < zero {
            k = -k;
            hk = -hk;
        }
        if r.abs() < one {
            let a_s = (one - r) * (one + r);
            let mut a = a_s.sqrt();
            let b_s = (h - k) * (h - k);
            let c = (T::of(4.0) - hk) / T::of(8.0);
            let d = (T::of(12.0) - hk) / T::of(16.0);
            let asr = -(b_s / a_s + hk) * half;
            if asr > T::of(-100.0) {
                bvn = a
                    * asr.exp()
                    * (one - c * (b_s - a_s) * (one - d * b_s / T::of(5.0)) / T::of(3.0)
                        + c * d * a_s * a_s / T::of(5.0));
            }
            if -hk < T::of(100.0) {
                let b = b_s.sqrt();
                bvn -= (-hk * half).exp()
                    * T::of(SQRT_2PI)
                    * norm_cdf_raw(-b / a)
                    * b
                    * (one - c * b_s * (one - d * b_s / T::of(5.0)) / T::of(3.0));
            }
            a *= half;
            for &(w, xq) in GAUSS_LEGENDRE_20.iter() {
                for &is in &[-1.0, 1.0] {
                    let xx = a * (T::of(is) * T::of(xq) + one);
                    let x_s = xx * xx;
                    let r_s = (one - x_s).sqrt();
                    let asr = -(b_s / x_s + hk) * half;
                    if asr > T::of(-100.0) {
                        bvn += a
                            * T::of(w)
                            * asr.exp()
                            * ((-hk * (one - r_s) / (T::of(2.0) * (one + r_s))).exp() / r_s
                                - (one + c * x_s * (one + d * x_s)));
                    }
                }
            }
            bvn = -bvn / two_pi;
        }
        if r > zero {
            bvn + norm_cdf_raw(-h.max(k))
        } else {
            bvn = -bvn;
            if k > h {
                bvn = bvn + norm_cdf_raw(k) - norm_cdf_raw(h);
            }
            bvn
        }
    }
}
