//! Bogner-Fox-Schmidt elements for the biharmonic Steklov problem on the
//! planar thin domain `{|x1| < l, |x2| < eps rho(x1)}`.
//!
//! Everything lives on the reference rectangle `(-l, l) x (-1, 1)`. The plate
//! energy is pulled back through `(x, y) -> (x, eps rho(x) y)`, so the
//! geometry is exact and the tensor-product elements stay `C^1`. The lateral
//! boundary is `y = +-1`; the clamped ends are `x = +-l`.

mod assemble;
mod bfs;
mod field;
mod pullback;
mod solve;

pub use assemble::{assemble_plate_forms, assemble_plate_forms_with, PlatePencil};
pub use bfs::{shape as bfs_shape, SLOTS};
pub use field::{normal_derivative_on_gamma, trace_on_gamma, BfsField, Side};
pub use pullback::{pullback_second_derivatives, PullbackTable};
pub use solve::{rayleigh_plate, solve_penalized_source, solve_steklov_2d};

use crate::error::{Error, Result};

pub const DEFAULT_QUAD: usize = 4;

/// Tensor grid on the reference rectangle.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh2D {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl Mesh2D {
    pub fn uniform(l: f64, nx: usize, ny: usize) -> Result<Self> {
        if nx < 2 {
            return Err(Error::BadCount {
                what: "Nx",
                got: nx,
                min: 2,
            });
        }
        if ny < 1 {
            return Err(Error::BadCount {
                what: "Ny",
                got: ny,
                min: 1,
            });
        }
        if !(l > 0.0) {
            return Err(Error::NonPositive { name: "l", value: l });
        }
        let grid = |half: f64, n: usize| {
            let mut v: Vec<f64> = (0..=n)
                .map(|i| -half + 2.0 * half * i as f64 / n as f64)
                .collect();
            v[n] = half;
            v
        };
        Ok(Self {
            xs: grid(l, nx),
            ys: grid(1.0, ny),
        })
    }

    pub fn nx(&self) -> usize {
        self.xs.len() - 1
    }

    pub fn ny(&self) -> usize {
        self.ys.len() - 1
    }

    pub fn l(&self) -> f64 {
        self.xs[self.xs.len() - 1]
    }

    pub fn node_count(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    pub fn element_count(&self) -> usize {
        self.nx() * self.ny()
    }

    pub fn dofs(&self) -> usize {
        SLOTS * self.node_count()
    }

    /// Nodes are numbered with `y` running fastest.
    pub fn node(&self, i: usize, j: usize) -> usize {
        i * self.ys.len() + j
    }

    /// Global dof indices of element `(ex, ey)` in local BFS order.
    pub fn element_dofs(&self, ex: usize, ey: usize) -> [usize; 16] {
        let mut out = [0; 16];
        for corner in 0..4 {
            let node = self.node(ex + corner % 2, ey + corner / 2);
            for slot in 0..SLOTS {
                out[4 * corner + slot] = SLOTS * node + slot;
            }
        }
        out
    }
}

pub fn build_mesh_2d(l: f64, nx: usize, ny: usize) -> Result<Mesh2D> {
    Mesh2D::uniform(l, nx, ny)
}
