//! Closed-form constants of the limit problem.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ProblemParams;

/// `N = (n-1) / (1 - 2 sigma + sigma n)`.
pub fn n_factor(n: usize, sigma: f64) -> f64 {
    let nf = n as f64;
    let denom = 1.0 - 2.0 * sigma + sigma * nf;
    assert!(
        denom > 0.0,
        "1 - 2 sigma + sigma n must be positive (n = {n}, sigma = {sigma})"
    );
    (nf - 1.0) / denom
}

/// Coefficient `1 - sigma^2 N` of the fourth-order term in the limit problem.
pub fn distortion_factor(n: usize, sigma: f64) -> f64 {
    1.0 - sigma * sigma * n_factor(n, sigma)
}

/// Volume of the unit ball in `R^m`, `pi^(m/2) / Gamma(m/2 + 1)`.
pub fn unit_ball_volume(m: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::BadDimension(m, 1));
    }
    // w_m = 2 pi / m * w_{m-2}, w_0 = 1, w_1 = 2
    let mut w = if m % 2 == 0 { 1.0 } else { 2.0 };
    let mut k = if m % 2 == 0 { 2 } else { 3 };
    while k <= m {
        w *= 2.0 * std::f64::consts::PI / k as f64;
        k += 2;
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    pub n_factor: f64,
    pub distortion: f64,
    /// `w_{n-1}`.
    pub ball_volume: f64,
}

impl DerivedConstants {
    pub fn new(params: &ProblemParams) -> Result<Self> {
        Ok(Self {
            n_factor: n_factor(params.n, params.sigma),
            distortion: distortion_factor(params.n, params.sigma),
            ball_volume: unit_ball_volume(params.n - 1)?,
        })
    }
}
