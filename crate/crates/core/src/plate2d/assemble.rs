use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::params::{validate_params, ProblemParams};
use crate::pencil::SymmetricMatrix;
use crate::profile::Profile;
use crate::quadrature::GaussLegendre;

use super::field::{normal_component, Side};
use super::pullback::pullback_second_derivatives;
use super::{bfs, Mesh2D, DEFAULT_QUAD, SLOTS};

/// Left and right forms of the discrete Steklov problem.
#[derive(Debug, Clone)]
pub struct PlatePencil {
    pub params: ProblemParams,
    pub profile: Profile,
    pub mesh: Mesh2D,
    /// Gauss points per direction.
    pub quad: usize,
    /// Plate energy plus `mu int u_nu phi_nu` over the lateral boundary.
    pub a: SymmetricMatrix,
    /// `int u phi` over the lateral boundary.
    pub b: SymmetricMatrix,
    /// Coefficients fixed to zero on the clamped ends.
    pub clamp: Vec<bool>,
}

pub fn assemble_plate_forms(
    params: &ProblemParams,
    profile: &Profile,
    mesh: &Mesh2D,
) -> Result<PlatePencil> {
    assemble_plate_forms_with(params, profile, mesh, DEFAULT_QUAD)
}

pub fn assemble_plate_forms_with(
    params: &ProblemParams,
    profile: &Profile,
    mesh: &Mesh2D,
    quad: usize,
) -> Result<PlatePencil> {
    let params = validate_params(*params)?;
    if params.n != 2 {
        return Err(Error::BadDimension(params.n, 2));
    }
    let eps = params.epsilon()?;
    let (sigma, mu) = (params.sigma, params.mu);
    let rule = GaussLegendre::new(quad);
    let ndof = mesh.dofs();
    let mut a = DMatrix::zeros(ndof, ndof);
    let mut b = DMatrix::zeros(ndof, ndof);

    for ex in 0..mesh.nx() {
        let (xa, xb) = (mesh.xs[ex], mesh.xs[ex + 1]);
        let hx = xb - xa;
        for ey in 0..mesh.ny() {
            let (ya, yb) = (mesh.ys[ey], mesh.ys[ey + 1]);
            let hy = yb - ya;
            let dofs = mesh.element_dofs(ex, ey);
            let mut ae = [[0.0; 16]; 16];

            for (x, wx) in rule.on_interval(xa, xb) {
                for (y, wy) in rule.on_interval(ya, yb) {
                    let table = pullback_second_derivatives(eps, profile, x, y)?;
                    let sh = bfs::shape((x - xa) / hx, (y - ya) / hy, hx, hy);
                    let hess: Vec<[f64; 3]> = sh
                        .iter()
                        .map(|s| {
                            let d = table.apply(&[s[1], s[2], s[3], s[4], s[5]]);
                            [d[2], d[3], d[4]]
                        })
                        .collect();
                    let w = wx * wy * table.jacobian;
                    for i in 0..16 {
                        let hi = hess[i];
                        for j in i..16 {
                            let hj = hess[j];
                            let frob = hi[0] * hj[0] + 2.0 * hi[1] * hj[1] + hi[2] * hj[2];
                            let lap = (hi[0] + hi[2]) * (hj[0] + hj[2]);
                            ae[i][j] += w * ((1.0 - sigma) * frob + sigma * lap);
                        }
                    }
                }
            }

            let mut be = [[0.0; 16]; 16];
            let sides = [(ey == 0, Side::Bottom), (ey + 1 == mesh.ny(), Side::Top)];
            for (on_boundary, side) in sides {
                if !on_boundary {
                    continue;
                }
                let y = side.y();
                let t = (y - ya) / hy;
                for (x, wx) in rule.on_interval(xa, xb) {
                    let (_, drho, _) = profile.eval(x)?;
                    let arc = (1.0 + eps * eps * drho * drho).sqrt();
                    let table = pullback_second_derivatives(eps, profile, x, y)?;
                    let sh = bfs::shape((x - xa) / hx, t, hx, hy);
                    let dn: Vec<f64> = sh
                        .iter()
                        .map(|s| {
                            let d = table.apply(&[s[1], s[2], s[3], s[4], s[5]]);
                            normal_component(eps, drho, side, d[0], d[1])
                        })
                        .collect();
                    let w = wx * arc;
                    for i in 0..16 {
                        for j in i..16 {
                            ae[i][j] += w * mu * dn[i] * dn[j];
                            be[i][j] += w * sh[i][0] * sh[j][0];
                        }
                    }
                }
            }

            for i in 0..16 {
                for j in i..16 {
                    let (gi, gj) = (dofs[i], dofs[j]);
                    a[(gi, gj)] += ae[i][j];
                    b[(gi, gj)] += be[i][j];
                    if i != j {
                        a[(gj, gi)] += ae[i][j];
                        b[(gj, gi)] += be[i][j];
                    }
                }
            }
        }
    }

    let mut clamp = vec![false; ndof];
    for i in [0, mesh.nx()] {
        for j in 0..mesh.ys.len() {
            let node = mesh.node(i, j);
            for slot in 0..SLOTS {
                clamp[SLOTS * node + slot] = true;
            }
        }
    }

    Ok(PlatePencil {
        params,
        profile: profile.clone(),
        mesh: mesh.clone(),
        quad,
        a: SymmetricMatrix::new(a)?,
        b: SymmetricMatrix::new(b)?,
        clamp,
    })
}

impl PlatePencil {
    pub fn epsilon(&self) -> f64 {
        self.params.epsilon.expect("validated at assembly")
    }

    pub fn active(&self) -> Vec<usize> {
        (0..self.clamp.len()).filter(|&i| !self.clamp[i]).collect()
    }

    /// Clamped left form, ready for factorization.
    pub fn clamped_a(&self) -> SymmetricMatrix {
        self.a.restrict(&self.active())
    }

    pub fn clamped_b(&self) -> SymmetricMatrix {
        self.b.restrict(&self.active())
    }
}
