//! Cross-section radius profiles with analytic derivatives.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shapes the cross-section radius may take.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProfileKind {
    Constant { c: f64 },
    /// Coefficients in ascending powers of `x1`.
    Polynomial { coeffs: Vec<f64> },
    /// `a + b cos(pi x1 / l)`.
    CosineBump { a: f64, b: f64 },
}

/// A radius function `rho` on `[-l, l]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub kind: ProfileKind,
    pub l: f64,
}

/// Slack allowed on the domain check, relative to `l`.
const DOMAIN_SLACK: f64 = 1e-12;
const POSITIVITY_SAMPLES: usize = 2001;

impl Profile {
    /// Builds a profile and checks that it is positive on `[-l, l]`.
    pub fn new(kind: ProfileKind, l: f64) -> Result<Self> {
        if !(l > 0.0) {
            return Err(Error::NonPositive { name: "l", value: l });
        }
        let profile = Self { kind, l };
        for i in 0..POSITIVITY_SAMPLES {
            let x = -l + 2.0 * l * i as f64 / (POSITIVITY_SAMPLES - 1) as f64;
            let (rho, _, _) = profile.raw(x);
            if !(rho > 0.0) || !rho.is_finite() {
                return Err(Error::NonPositiveProfile { x, value: rho });
            }
        }
        Ok(profile)
    }

    pub fn constant(c: f64, l: f64) -> Result<Self> {
        Self::new(ProfileKind::Constant { c }, l)
    }

    pub fn polynomial(coeffs: Vec<f64>, l: f64) -> Result<Self> {
        Self::new(ProfileKind::Polynomial { coeffs }, l)
    }

    pub fn cosine_bump(a: f64, b: f64, l: f64) -> Result<Self> {
        Self::new(ProfileKind::CosineBump { a, b }, l)
    }

    pub fn is_constant(&self) -> bool {
        match &self.kind {
            ProfileKind::Constant { .. } => true,
            ProfileKind::Polynomial { coeffs } => coeffs.iter().skip(1).all(|&c| c == 0.0),
            ProfileKind::CosineBump { b, .. } => *b == 0.0,
        }
    }

    /// Returns `(rho, rho', rho'')` at `x1`.
    pub fn eval(&self, x1: f64) -> Result<(f64, f64, f64)> {
        if !(x1.abs() <= self.l * (1.0 + DOMAIN_SLACK)) {
            return Err(Error::OutOfDomain { x: x1, l: self.l });
        }
        let triple = self.raw(x1);
        if !(triple.0 > 0.0) {
            return Err(Error::NonPositiveProfile {
                x: x1,
                value: triple.0,
            });
        }
        Ok(triple)
    }

    /// `rho(x1)` alone.
    pub fn rho(&self, x1: f64) -> Result<f64> {
        self.eval(x1).map(|t| t.0)
    }

    fn raw(&self, x: f64) -> (f64, f64, f64) {
        match &self.kind {
            ProfileKind::Constant { c } => (*c, 0.0, 0.0),
            ProfileKind::Polynomial { coeffs } => {
                // Horner for p, p', p'' together
                let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
                for &c in coeffs.iter().rev() {
                    ddp = ddp * x + 2.0 * dp;
                    dp = dp * x + p;
                    p = p * x + c;
                }
                (p, dp, ddp)
            }
            ProfileKind::CosineBump { a, b } => {
                let w = PI / self.l;
                let (s, c) = (w * x).sin_cos();
                (a + b * c, -b * w * s, -b * w * w * c)
            }
        }
    }
}

/// Convenience for the profile evaluation operation.
pub fn profile_eval(profile: &Profile, x1: f64) -> Result<(f64, f64, f64)> {
    profile.eval(x1)
}
