use crate::error::{Error, Result};
use crate::hermite;
use crate::profile::Profile;

use super::pullback::pullback_second_derivatives;
use super::{bfs, Mesh2D, SLOTS};

/// Component of the lateral boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `y = 1`, i.e. `x2 = eps rho(x1)`.
    Top,
    /// `y = -1`.
    Bottom,
}

impl Side {
    pub fn y(self) -> f64 {
        match self {
            Side::Top => 1.0,
            Side::Bottom => -1.0,
        }
    }
}

/// Bicubic `C^1` field on the reference rectangle, four coefficients per node.
#[derive(Debug, Clone, PartialEq)]
pub struct BfsField {
    pub mesh: Mesh2D,
    pub coeffs: Vec<f64>,
}

impl BfsField {
    pub fn zeros(mesh: &Mesh2D) -> Self {
        Self {
            mesh: mesh.clone(),
            coeffs: vec![0.0; mesh.dofs()],
        }
    }

    pub fn from_coeffs(mesh: &Mesh2D, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != mesh.dofs() {
            return Err(Error::DimensionMismatch {
                expected: mesh.dofs(),
                got: coeffs.len(),
            });
        }
        Ok(Self {
            mesh: mesh.clone(),
            coeffs,
        })
    }

    /// Nodal interpolant of a reference function given as
    /// `f(x, y) = [u, u_x, u_y, u_xy]`.
    pub fn interpolate(mesh: &Mesh2D, f: impl Fn(f64, f64) -> [f64; 4]) -> Self {
        let mut coeffs = vec![0.0; mesh.dofs()];
        for (i, &x) in mesh.xs.iter().enumerate() {
            for (j, &y) in mesh.ys.iter().enumerate() {
                let node = mesh.node(i, j);
                coeffs[SLOTS * node..SLOTS * node + SLOTS].copy_from_slice(&f(x, y));
            }
        }
        Self {
            mesh: mesh.clone(),
            coeffs,
        }
    }

    /// Interpolant of a physical function `u(x1, x2) = [u, u_1, u_2, u_12]`
    /// (with `u_22` needed for the mixed reference slot) on the domain of
    /// thinness `eps`.
    pub fn interpolate_physical(
        mesh: &Mesh2D,
        eps: f64,
        profile: &Profile,
        u: impl Fn(f64, f64) -> [f64; 5],
    ) -> Result<Self> {
        let mut coeffs = vec![0.0; mesh.dofs()];
        for (i, &x) in mesh.xs.iter().enumerate() {
            let (rho, drho, _) = profile.eval(x)?;
            for (j, &y) in mesh.ys.iter().enumerate() {
                let [v, u1, u2, u12, u22] = u(x, eps * rho * y);
                // x2 = eps rho y: d/dx = d1 + eps rho' y d2, d/dy = eps rho d2
                let ux = u1 + eps * drho * y * u2;
                let uy = eps * rho * u2;
                let uxy = eps * drho * u2 + eps * rho * (u12 + eps * drho * y * u22);
                let node = mesh.node(i, j);
                coeffs[SLOTS * node..SLOTS * node + SLOTS].copy_from_slice(&[v, ux, uy, uxy]);
            }
        }
        Ok(Self {
            mesh: mesh.clone(),
            coeffs,
        })
    }

    /// `[u, u_x, u_y, u_xx, u_xy, u_yy]` in reference coordinates.
    pub fn eval_reference(&self, x: f64, y: f64) -> Result<[f64; 6]> {
        let mesh = &self.mesh;
        let l = mesh.l();
        if !(x.abs() <= l * (1.0 + 1e-12)) {
            return Err(Error::OutOfDomain { x, l });
        }
        if !(y.abs() <= 1.0 + 1e-12) {
            return Err(Error::OutOfDomain { x: y, l: 1.0 });
        }
        let ex = hermite::locate(&mesh.xs, x);
        let ey = hermite::locate(&mesh.ys, y);
        let hx = mesh.xs[ex + 1] - mesh.xs[ex];
        let hy = mesh.ys[ey + 1] - mesh.ys[ey];
        let sh = bfs::shape((x - mesh.xs[ex]) / hx, (y - mesh.ys[ey]) / hy, hx, hy);
        let mut out = [0.0; 6];
        for (local, &dof) in mesh.element_dofs(ex, ey).iter().enumerate() {
            let c = self.coeffs[dof];
            for (o, s) in out.iter_mut().zip(&sh[local]) {
                *o += c * s;
            }
        }
        Ok(out)
    }

    pub fn scale(&mut self, c: f64) {
        self.coeffs.iter_mut().for_each(|v| *v *= c);
    }
}

/// Trace of the field on one lateral boundary component at `x1`.
pub fn trace_on_gamma(field: &BfsField, side: Side, x1: f64) -> Result<f64> {
    Ok(field.eval_reference(x1, side.y())?[0])
}

/// Outward normal derivative in physical coordinates on the lateral boundary.
///
/// The outward unit normal at `x2 = +-eps rho(x1)` is
/// `(-eps rho', +-1) / sqrt(1 + eps^2 rho'^2)`.
pub fn normal_derivative_on_gamma(
    eps: f64,
    profile: &Profile,
    field: &BfsField,
    side: Side,
    x1: f64,
) -> Result<f64> {
    let y = side.y();
    let r = field.eval_reference(x1, y)?;
    let table = pullback_second_derivatives(eps, profile, x1, y)?;
    let [u1, u2, ..] = table.apply(&[r[1], r[2], r[3], r[4], r[5]]);
    let (_, drho, _) = profile.eval(x1)?;
    Ok(normal_component(eps, drho, side, u1, u2))
}

/// `grad u . nu` for the outward normal of `side`.
pub(crate) fn normal_component(eps: f64, drho: f64, side: Side, u1: f64, u2: f64) -> f64 {
    let s = (1.0 + eps * eps * drho * drho).sqrt();
    (-eps * drho * u1 + side.y() * u2) / s
}
