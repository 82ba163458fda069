//! Marginal likelihood estimation for hierarchical models whose likelihood is
//! intractable but unbiasedly estimable: an outer importance sampler over the
//! group-level parameters carries an inner per-subject importance-sampling
//! likelihood estimator, giving an unbiased estimate of the marginal
//! likelihood together with analytic and bootstrap standard errors, posterior
//! expectations, and the particle-count tuning theory that keeps the nested
//! estimator efficient.

pub mod error;
pub mod linalg;
pub mod math;
pub mod rng;

pub use error::{Error, Result};
