//! Reproducible normal sampling with partitionable streams.
//!
//! Reproducibility contract: a [`NormalStream`] is fully determined by its
//! `(seed, stream)` pair. The generator is ChaCha8 (`rand_chacha` 0.3,
//! seeded via `seed_from_u64`, stream selected via `set_stream`), and
//! variates are drawn through the ziggurat sampler of `rand_distr`'s
//! `StandardNormal` at `f64` precision regardless of the scalar type.
//! Both algorithms are versioned, platform-independent specifications, so
//! `(seed, stream, position) → variate` is bit-stable everywhere.
//!
//! The `stream` index exists so simulation work can be partitioned: chunk
//! `k` of a job draws from `(seed, k)` and the merged result is identical
//! no matter how chunks are scheduled across threads.

use std::marker::PhantomData;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::numerics::cholesky::CholeskyFactor3;
use crate::scalar::Real;

/// A deterministic stream of standard normal variates, identified by a
/// `(seed, stream)` pair.
#[derive(Debug, Clone)]
pub struct NormalStream<T> {
    rng: ChaCha8Rng,
    _scalar: PhantomData<fn() -> T>,
}

impl<T: Real> NormalStream<T> {
    /// Opens the stream identified by `(seed, stream)` at position zero.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            rng,
            _scalar: PhantomData,
        }
    }

    /// Draws the next standard normal variate.
    #[inline]
    pub fn next_normal(&mut self) -> T {
        T::sample_standard_normal(&mut self.rng)
    }
}

/// Draws one correlated triple `(z, a1, a2) = L·(e1, e2, e3)` from three
/// consecutive independent variates of `stream`.
///
/// Deterministic per `(seed, stream, position)`; the marginals are
/// standard normal and the empirical correlations converge to the matrix
/// that produced `l`.
pub fn sample_std_normal_vec<T: Real>(
    stream: &mut NormalStream<T>,
    l: &CholeskyFactor3<T>,
) -> (T, T, T) {
    let e1 = stream.next_normal();
    let e2 = stream.next_normal();
    let e3 = stream.next_normal();
    l.correlate((e1, e2, e3))
}
