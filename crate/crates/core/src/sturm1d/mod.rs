//! Hermite-cubic finite elements for the clamped fourth-order limit problem
//!
//! `(1 - sigma^2 N) (rho^{n-1} V'')'' = lambda (n-1) rho^{n-2} V` on `(-l, l)`,
//! `V = V' = 0` at both ends, together with its resolvent
//! `(K + M) V = M g`.

mod field;

pub use field::{eval_field_1d, HermiteField};

use nalgebra::{DMatrix, DVector};

use crate::constants::{distortion_factor, unit_ball_volume};
use crate::error::{Error, Result};
use crate::hermite;
use crate::params::{validate_params, ProblemParams};
use crate::pencil::{finite_pencil_eigs, solve_spd, EigenSolution, SymmetricMatrix};
use crate::profile::Profile;
use crate::quadrature::GaussLegendre;

pub const DEFAULT_QUAD: usize = 4;

/// Mesh of `[-l, l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh1D {
    pub nodes: Vec<f64>,
}

impl Mesh1D {
    pub fn uniform(l: f64, elements: usize) -> Result<Self> {
        if elements < 2 {
            return Err(Error::BadCount {
                what: "element count",
                got: elements,
                min: 2,
            });
        }
        if !(l > 0.0) {
            return Err(Error::NonPositive { name: "l", value: l });
        }
        let h = 2.0 * l / elements as f64;
        let mut nodes: Vec<f64> = (0..=elements).map(|i| -l + h * i as f64).collect();
        nodes[elements] = l;
        Ok(Self { nodes })
    }

    /// Arbitrary strictly increasing nodes with symmetric endpoints.
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::BadCount {
                what: "element count",
                got: nodes.len().saturating_sub(1),
                min: 2,
            });
        }
        let l = nodes[nodes.len() - 1];
        if nodes[0] != -l || !(l > 0.0) || nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Config(
                "mesh nodes must increase strictly from -l to l".into(),
            ));
        }
        Ok(Self { nodes })
    }

    pub fn elements(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn l(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    pub fn dofs(&self) -> usize {
        2 * self.nodes.len()
    }
}

pub fn build_mesh_1d(l: f64, elements: usize) -> Result<Mesh1D> {
    Mesh1D::uniform(l, elements)
}

/// Stiffness and weighted mass matrices of the limit problem.
#[derive(Debug, Clone)]
pub struct LimitPencil {
    pub params: ProblemParams,
    pub profile: Profile,
    pub mesh: Mesh1D,
    pub quad: usize,
    /// `(1 - sigma^2 N) int rho^{n-1} V'' psi''`.
    pub stiffness: SymmetricMatrix,
    /// `int rho^{n-1} V'' psi''`, before the distortion factor.
    pub bending: SymmetricMatrix,
    pub distortion: f64,
    /// `(n-1) int rho^{n-2} V psi`.
    pub mass: SymmetricMatrix,
    /// `true` for coefficients fixed to zero by the clamped ends.
    pub clamp: Vec<bool>,
}

pub fn assemble_limit_pencil(
    params: &ProblemParams,
    profile: &Profile,
    mesh: &Mesh1D,
) -> Result<LimitPencil> {
    assemble_limit_pencil_with(params, profile, mesh, DEFAULT_QUAD)
}

pub fn assemble_limit_pencil_with(
    params: &ProblemParams,
    profile: &Profile,
    mesh: &Mesh1D,
    quad: usize,
) -> Result<LimitPencil> {
    let params = validate_params(*params)?;
    let rule = GaussLegendre::new(quad);
    let ndof = mesh.dofs();
    let mut k = DMatrix::zeros(ndof, ndof);
    let mut m = DMatrix::zeros(ndof, ndof);
    for e in 0..mesh.elements() {
        let (ke, me) = raw_element_matrices(&params, profile, mesh.nodes[e], mesh.nodes[e + 1], &rule)?;
        for i in 0..4 {
            for j in 0..4 {
                k[(2 * e + i, 2 * e + j)] += ke[i][j];
                m[(2 * e + i, 2 * e + j)] += me[i][j];
            }
        }
    }

    let mut clamp = vec![false; ndof];
    for d in [0, 1, ndof - 2, ndof - 1] {
        clamp[d] = true;
    }
    let distortion = distortion_factor(params.n, params.sigma);
    let bending = SymmetricMatrix::new(k)?;
    Ok(LimitPencil {
        params,
        profile: profile.clone(),
        mesh: mesh.clone(),
        quad,
        stiffness: bending.scaled(distortion),
        bending,
        distortion,
        mass: SymmetricMatrix::new(m)?,
        clamp,
    })
}

/// Element stiffness and mass matrices on `[xa, xb]`, Hermite dof order.
pub fn element_matrices(
    params: &ProblemParams,
    profile: &Profile,
    xa: f64,
    xb: f64,
    rule: &GaussLegendre,
) -> Result<([[f64; 4]; 4], [[f64; 4]; 4])> {
    let (mut ke, me) = raw_element_matrices(params, profile, xa, xb, rule)?;
    let distortion = distortion_factor(params.n, params.sigma);
    for row in ke.iter_mut() {
        for v in row.iter_mut() {
            *v *= distortion;
        }
    }
    Ok((ke, me))
}

fn raw_element_matrices(
    params: &ProblemParams,
    profile: &Profile,
    xa: f64,
    xb: f64,
    rule: &GaussLegendre,
) -> Result<([[f64; 4]; 4], [[f64; 4]; 4])> {
    let n = params.n as i32;
    let weight = (params.n - 1) as f64;
    let h = xb - xa;
    let mut ke = [[0.0; 4]; 4];
    let mut me = [[0.0; 4]; 4];
    for (x, w) in rule.on_interval(xa, xb) {
        let rho = profile.rho(x)?;
        let s = hermite::shape((x - xa) / h, h);
        let kw = w * rho.powi(n - 1);
        let mw = w * rho.powi(n - 2);
        for i in 0..4 {
            for j in 0..4 {
                ke[i][j] += kw * s[2][i] * s[2][j];
                me[i][j] += mw * s[0][i] * s[0][j];
            }
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            me[i][j] *= weight;
        }
    }
    Ok((ke, me))
}

impl LimitPencil {
    pub fn active(&self) -> Vec<usize> {
        (0..self.clamp.len()).filter(|&i| !self.clamp[i]).collect()
    }

    fn expand(&self, active: &[usize], reduced: &DVector<f64>) -> DVector<f64> {
        let mut full = DVector::zeros(self.clamp.len());
        for (&i, &v) in active.iter().zip(reduced.iter()) {
            full[i] = v;
        }
        full
    }

    /// Copy of `coeffs` with clamped entries zeroed.
    fn clamped(&self, coeffs: &[f64]) -> DVector<f64> {
        DVector::from_iterator(
            coeffs.len(),
            coeffs
                .iter()
                .zip(&self.clamp)
                .map(|(&c, &fixed)| if fixed { 0.0 } else { c }),
        )
    }

    /// Eigenfunction `k` rescaled to unit norm in `L^2((n-1) w_{n-1} rho^{n-2} dx)`.
    pub fn eigenfunction(&self, solution: &EigenSolution, k: usize) -> Result<HermiteField> {
        let w = unit_ball_volume(self.params.n - 1)?;
        let mut field = HermiteField::from_coeffs(&self.mesh, solution.vector(k).as_slice().to_vec())?;
        field.scale(1.0 / w.sqrt());
        Ok(field)
    }
}

/// First `k_max` eigenpairs, vectors orthonormal in the mass matrix.
///
/// Each vector's first clearly nonzero interior value coefficient is positive.
pub fn solve_limit_eigs(pencil: &LimitPencil, k_max: usize) -> Result<EigenSolution> {
    let active = pencil.active();
    // the distortion factor is applied after the solve so the sigma dependence is exact
    let k = pencil.bending.restrict(&active);
    let m = pencil.mass.restrict(&active);
    let mut reduced = finite_pencil_eigs(&k, &m, k_max)?;
    for v in reduced.values.iter_mut() {
        *v *= pencil.distortion;
    }
    let mut vectors = DMatrix::zeros(pencil.clamp.len(), k_max);
    for c in 0..k_max {
        let mut v = pencil.expand(&active, &reduced.vector(c));
        fix_sign(&mut v);
        vectors.set_column(c, &v);
    }
    Ok(EigenSolution {
        vectors,
        ..reduced
    })
}

fn fix_sign(v: &mut DVector<f64>) {
    let scale = v.iter().step_by(2).fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().step_by(2).find(|x| x.abs() > 1e-8 * scale) {
        if *first < 0.0 {
            v.neg_mut();
        }
    }
}

/// Right-hand side data of the limit resolvent problem.
pub enum LimitSource<'a> {
    /// Hermite coefficients of `g` on the pencil mesh.
    Coefficients(&'a [f64]),
    /// `g` as a function of `x1`.
    Function(&'a dyn Fn(f64) -> f64),
    /// Boundary data on the two lateral components, averaged first (`n = 2`).
    Boundary {
        top: &'a dyn Fn(f64) -> f64,
        bottom: &'a dyn Fn(f64) -> f64,
    },
}

/// Solves `(K + M) V = (n-1) int rho^{n-2} g psi` with clamped ends.
pub fn solve_limit_source(pencil: &LimitPencil, source: LimitSource<'_>) -> Result<HermiteField> {
    let rhs = match source {
        LimitSource::Coefficients(g) => {
            if g.len() != pencil.clamp.len() {
                return Err(Error::DimensionMismatch {
                    expected: pencil.clamp.len(),
                    got: g.len(),
                });
            }
            pencil.mass.as_matrix() * DVector::from_column_slice(g)
        }
        LimitSource::Function(g) => load_vector(pencil, g)?,
        LimitSource::Boundary { top, bottom } => {
            if pencil.params.n != 2 {
                return Err(Error::BadDimension(pencil.params.n, 2));
            }
            let g = mean_operator(top, bottom);
            load_vector(pencil, &g)?
        }
    };
    let active = pencil.active();
    let system = pencil.stiffness.add_scaled(1.0, &pencil.mass)?.restrict(&active);
    let reduced_rhs = DVector::from_iterator(active.len(), active.iter().map(|&i| rhs[i]));
    let sol = solve_spd(&system, &reduced_rhs)?;
    HermiteField::from_coeffs(&pencil.mesh, pencil.expand(&active, &sol).as_slice().to_vec())
}

fn load_vector(pencil: &LimitPencil, g: &dyn Fn(f64) -> f64) -> Result<DVector<f64>> {
    let rule = GaussLegendre::new(pencil.quad);
    let mesh = &pencil.mesh;
    let weight = (pencil.params.n - 1) as f64;
    let mut f = DVector::zeros(mesh.dofs());
    for e in 0..mesh.elements() {
        let (xa, xb) = (mesh.nodes[e], mesh.nodes[e + 1]);
        let h = xb - xa;
        for (x, w) in rule.on_interval(xa, xb) {
            let rho = pencil.profile.rho(x)?;
            let s = hermite::shape((x - xa) / h, h);
            let c = weight * w * rho.powi(pencil.params.n as i32 - 2) * g(x);
            for i in 0..4 {
                f[2 * e + i] += c * s[0][i];
            }
        }
    }
    Ok(f)
}

/// Average of the traces on the two lateral boundary components.
pub fn mean_operator<'a>(
    top: &'a dyn Fn(f64) -> f64,
    bottom: &'a dyn Fn(f64) -> f64,
) -> impl Fn(f64) -> f64 + 'a {
    move |x| 0.5 * (top(x) + bottom(x))
}

/// `c^T K c / c^T M c` after zeroing the clamped coefficients.
pub fn rayleigh_1d(pencil: &LimitPencil, field: &HermiteField) -> Result<f64> {
    if field.coeffs.len() != pencil.clamp.len() {
        return Err(Error::DimensionMismatch {
            expected: pencil.clamp.len(),
            got: field.coeffs.len(),
        });
    }
    let c = pencil.clamped(&field.coeffs);
    let den = pencil.mass.quadratic_form(&c);
    if !(den > 0.0) {
        return Err(Error::ZeroTrace);
    }
    Ok(pencil.stiffness.quadratic_form(&c) / den)
}
