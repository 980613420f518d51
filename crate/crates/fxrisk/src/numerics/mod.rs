//! Numerical foundations shared by the model, simulation, and CLI layers:
//! validated scalar newtypes, normal special functions, the 3×3
//! correlation factorization, and reproducible normal sampling.
//!
//! Everything here is pure and `Send + Sync`; random state is value-owned
//! by [`sampling::NormalStream`], never shared.

pub mod bivariate;
pub mod cholesky;
pub mod normal;
pub mod sampling;
pub mod types;
