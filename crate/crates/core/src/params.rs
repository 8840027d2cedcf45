use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical and configuration constants of a thin-domain problem.
///
/// `epsilon` is only needed for two-dimensional runs; the limit problem does
/// not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemParams {
    /// Space dimension of the thin domain.
    pub n: usize,
    /// Poisson ratio, `-1/(n-1) < sigma < 1`.
    pub sigma: f64,
    /// Penalty on the normal derivative along the lateral boundary.
    pub mu: f64,
    /// Half-length of the segment `[-l, l]`.
    pub l: f64,
    /// Thinness parameter.
    pub epsilon: Option<f64>,
}

impl ProblemParams {
    pub fn new(n: usize, sigma: f64, mu: f64, l: f64) -> Self {
        Self {
            n,
            sigma,
            mu,
            l,
            epsilon: None,
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = Some(epsilon);
        self
    }

    /// Thinness parameter of a two-dimensional run.
    pub fn epsilon(&self) -> Result<f64> {
        match self.epsilon {
            Some(eps) if eps > 0.0 => Ok(eps),
            Some(eps) => Err(Error::NonPositive {
                name: "epsilon",
                value: eps,
            }),
            None => Err(Error::Config("epsilon is required for a 2D run".into())),
        }
    }

    /// Lower end of the admissible Poisson ratio interval, `-1/(n-1)`.
    pub fn sigma_min(n: usize) -> f64 {
        -1.0 / (n as f64 - 1.0)
    }
}

/// Checks the admissible parameter ranges and returns the parameters unchanged.
pub fn validate_params(p: ProblemParams) -> Result<ProblemParams> {
    if p.n < 2 {
        return Err(Error::BadDimension(p.n, 2));
    }
    if !(p.sigma > ProblemParams::sigma_min(p.n) && p.sigma < 1.0) {
        return Err(Error::SigmaOutOfRange {
            n: p.n,
            sigma: p.sigma,
        });
    }
    for (name, value) in [("mu", p.mu), ("l", p.l)] {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::NonPositive { name, value });
        }
    }
    if let Some(eps) = p.epsilon {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::NonPositive {
                name: "epsilon",
                value: eps,
            });
        }
    }
    Ok(p)
}
