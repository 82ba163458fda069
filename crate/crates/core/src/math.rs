//! Log-domain primitives shared by every estimator.
//!
//! All densities and importance weights in this crate live on the natural-log
//! scale end to end; products over subjects and trials underflow otherwise.
//! A log-domain value may be `-inf` (zero density) but never NaN or `+inf`.

use crate::error::{Error, Result};

/// Checks a slice of log-domain values: NaN and `+inf` are rejected.
fn validate(xs: &[f64]) -> Result<()> {
    if xs.iter().any(|x| x.is_nan() || *x == f64::INFINITY) {
        return Err(Error::InvalidLogValue);
    }
    Ok(())
}

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// more accurate than a left fold on long vectors.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// log(exp(a) + exp(b)) without overflow.
pub fn log_sum_exp2(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// log Σ exp(x_i), exact when all inputs are `-inf` (returns `-inf`).
pub fn log_sum_exp(xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::EmptyLogSum);
    }
    validate(xs)?;
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let shifted: Vec<f64> = xs.iter().map(|x| (x - m).exp()).collect();
    Ok(m + pairwise_sum(&shifted).ln())
}

/// log of the arithmetic mean of exp(x_i): log_sum_exp(xs) − log(len).
pub fn log_mean_exp(xs: &[f64]) -> Result<f64> {
    Ok(log_sum_exp(xs)? - (xs.len() as f64).ln())
}

/// Moments of self-normalized weights ŵ_i = w_i / Σ w_j given log weights.
///
/// Returns (Σ ŵ_i², ESS) with ESS = 1 / Σ ŵ_i². Errors if every weight is
/// zero (all inputs `-inf`).
pub fn normalized_weight_moments(log_ws: &[f64]) -> Result<(f64, f64)> {
    if log_ws.is_empty() {
        return Err(Error::EmptyLogSum);
    }
    validate(log_ws)?;
    let m = log_ws.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return Err(Error::ZeroTotalWeight);
    }
    let w1: Vec<f64> = log_ws.iter().map(|x| (x - m).exp()).collect();
    let w2: Vec<f64> = w1.iter().map(|w| w * w).collect();
    let s1 = pairwise_sum(&w1);
    let s2 = pairwise_sum(&w2);
    let sum_sq_normalized = s2 / (s1 * s1);
    Ok((sum_sq_normalized, 1.0 / sum_sq_normalized))
}

/// Largest normalized weight max_i ŵ_i.
pub fn max_normalized_weight(log_ws: &[f64]) -> Result<f64> {
    validate(log_ws)?;
    let lse = log_sum_exp(log_ws)?;
    if lse == f64::NEG_INFINITY {
        return Err(Error::ZeroTotalWeight);
    }
    let m = log_ws.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((m - lse).exp())
}

/// Sample variance with the n−1 denominator.
pub fn sample_variance(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let mean = pairwise_sum(xs) / n as f64;
    let sq: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
    pairwise_sum(&sq) / (n as f64 - 1.0)
}
