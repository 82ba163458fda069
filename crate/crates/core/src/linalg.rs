//! Dense vector/matrix helpers on top of nalgebra, plus the multivariate
//! normal used throughout the proposal and model code.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::rng::RngStream;

pub const LN_2PI: f64 = 1.8378770664093453;

/// Relative asymmetry tolerance for covariance inputs.
const SYM_RTOL: f64 = 1e-10;

/// Ridge scale used when a Cholesky factorization fails on the first try.
const RIDGE_EPS: f64 = 1e-8;

/// Checks symmetry within tolerance and returns the symmetrized matrix.
pub fn symmetrize(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSymmetric);
    }
    let scale = m.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            if (m[(i, j)] - m[(j, i)]).abs() > SYM_RTOL * scale {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok((m + m.transpose()) * 0.5)
}

/// Cholesky factorization with one ridge retry: on failure, adds
/// ε·trace(Σ)/d to the diagonal (ε = 1e-8) and tries again.
pub fn ridge_cholesky(m: &DMatrix<f64>) -> Result<Cholesky<f64, Dyn>> {
    if let Some(chol) = Cholesky::new(m.clone()) {
        return Ok(chol);
    }
    let d = m.nrows() as f64;
    let ridge = (RIDGE_EPS * m.trace() / d).abs().max(RIDGE_EPS * 1e-8);
    let mut regularized = m.clone();
    for i in 0..m.nrows() {
        regularized[(i, i)] += ridge;
    }
    Cholesky::new(regularized).ok_or(Error::SingularCovariance)
}

/// log |Σ| from its Cholesky factor.
pub fn log_det_from_chol(chol: &Cholesky<f64, Dyn>) -> f64 {
    2.0 * chol.l_dirty().diagonal().iter().map(|x| x.ln()).sum::<f64>()
}

/// A multivariate normal with a precomputed factorization.
#[derive(Debug, Clone)]
pub struct MvNormal {
    mean: DVector<f64>,
    chol: Cholesky<f64, Dyn>,
    log_norm: f64,
}

impl MvNormal {
    pub fn new(mean: DVector<f64>, cov: &DMatrix<f64>) -> Result<Self> {
        let cov = symmetrize(cov)?;
        let chol = ridge_cholesky(&cov)?;
        let d = mean.len() as f64;
        let log_norm = -0.5 * (d * LN_2PI + log_det_from_chol(&chol));
        Ok(MvNormal { mean, chol, log_norm })
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn log_pdf(&self, x: &DVector<f64>) -> f64 {
        let diff = x - &self.mean;
        // Solve L z = diff; the quadratic form is |z|².
        let z = self.chol.l_dirty().solve_lower_triangular(&diff).expect("lower solve");
        self.log_norm - 0.5 * z.norm_squared()
    }

    /// μ + L z with z drawn from the stream.
    pub fn sample(&self, stream: &mut RngStream) -> DVector<f64> {
        self.mean.clone() + self.perturbation(stream)
    }

    /// The pair (μ + Lz, μ − Lz) for antithetic sampling.
    pub fn sample_antithetic(&self, stream: &mut RngStream) -> (DVector<f64>, DVector<f64>) {
        let w = self.perturbation(stream);
        (&self.mean + &w, &self.mean - &w)
    }

    fn perturbation(&self, stream: &mut RngStream) -> DVector<f64> {
        let z = DVector::from_fn(self.dim(), |_, _| stream.sample::<f64, _>(StandardNormal));
        self.chol.l_dirty() * z
    }

    pub fn chol_l(&self) -> DMatrix<f64> {
        let mut l = self.chol.l_dirty().clone_owned();
        l.fill_upper_triangle(0.0, 1);
        l
    }
}

/// Sample mean and covariance (n−1 denominator) of the rows of `draws`.
pub fn sample_mean_cov(draws: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = draws.nrows();
    let d = draws.ncols();
    let mean = DVector::from_fn(d, |j, _| draws.column(j).sum() / n as f64);
    let mut cov = DMatrix::zeros(d, d);
    for row in draws.row_iter() {
        let diff = row.transpose() - &mean;
        cov.syger(1.0, &diff, &diff, 1.0);
    }
    cov.fill_upper_triangle_with_lower_triangle();
    cov /= (n as f64 - 1.0).max(1.0);
    (mean, cov)
}
