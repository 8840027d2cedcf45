//! Chain rule for the map `(x, y) -> (x, eps rho(x) y)` from the reference
//! rectangle onto the thin domain.

use crate::error::Result;
use crate::profile::Profile;

/// Physical derivatives as linear combinations of reference derivatives.
///
/// Each row holds the coefficients of `(u_x, u_y, u_xx, u_xy, u_yy)` of the
/// reference function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PullbackTable {
    pub d1: [f64; 5],
    pub d2: [f64; 5],
    pub d11: [f64; 5],
    pub d12: [f64; 5],
    pub d22: [f64; 5],
    /// Area element `eps rho(x)`.
    pub jacobian: f64,
}

impl PullbackTable {
    /// `[u_1, u_2, u_11, u_12, u_22]` from reference derivatives
    /// `[u_x, u_y, u_xx, u_xy, u_yy]`.
    pub fn apply(&self, reference: &[f64; 5]) -> [f64; 5] {
        let dot = |row: &[f64; 5]| row.iter().zip(reference).map(|(a, b)| a * b).sum();
        [
            dot(&self.d1),
            dot(&self.d2),
            dot(&self.d11),
            dot(&self.d12),
            dot(&self.d22),
        ]
    }
}

/// Table at reference point `(x1, y)` for thinness `eps`.
pub fn pullback_second_derivatives(
    eps: f64,
    profile: &Profile,
    x1: f64,
    y: f64,
) -> Result<PullbackTable> {
    let (rho, drho, ddrho) = profile.eval(x1)?;
    let r = drho / rho;
    // y = X2 / (eps rho(X1)):  dy/dX1 = a,  dy/dX2 = c
    let a = -y * r;
    let a_y = -r;
    let a_x = -y * (ddrho / rho - r * r);
    let c = 1.0 / (eps * rho);
    Ok(PullbackTable {
        d1: [1.0, a, 0.0, 0.0, 0.0],
        d2: [0.0, c, 0.0, 0.0, 0.0],
        d11: [0.0, a_x + a * a_y, 1.0, 2.0 * a, a * a],
        d12: [0.0, c * a_y, 0.0, c, c * a],
        d22: [0.0, 0.0, 0.0, 0.0, c * c],
        jacobian: eps * rho,
    })
}
