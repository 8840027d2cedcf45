use nalgebra::{DMatrix, DVector};
use super::{factor_spd, symmetric_eigen, SymmetricMatrix};
use crate::error::{Error, Result};

/// Eigenvalues `mu` of the reduced pencil below this fraction of the largest
/// are treated as infinite eigenvalues of `(A, B)`.
pub const RANK_THRESHOLD: f64 = 1e-12;

/// Finite eigenpairs of a pencil, ascending, with `B`-orthonormal vectors.
#[derive(Debug, Clone)]
pub struct EigenSolution {
    pub values: Vec<f64>,
    /// One eigenvector per column.
    pub vectors: DMatrix<f64>,
    /// Number of finite eigenvalues of the pencil (rank of `B`).
    pub finite_count: usize,
    /// `|A v - lambda B v| / (|A|_F |v|)` per returned pair.
    pub residuals: Vec<f64>,
}

impl EigenSolution {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn vector(&self, k: usize) -> DVector<f64> {
        self.vectors.column(k).into_owned()
    }
}

/// The `k_max` smallest finite eigenvalues of `A v = lambda B v`.
///
/// With `A = L L^T` and `B = G^T G` (`G` has `r = rank B` rows), the nonzero
/// eigenvalues `m` of `X^T X`, `X = L^{-1} G^T`, give `lambda = 1/m`. Only an
/// `r x r` symmetric eigenproblem is solved.
pub fn finite_pencil_eigs(
    a: &SymmetricMatrix,
    b: &SymmetricMatrix,
    k_max: usize,
) -> Result<EigenSolution> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.dim(),
        });
    }
    let factor = factor_spd(a)?;
    let g = trace_factor(b)?;
    let r = g.nrows();

    // X = L^{-1} G^T, column by column
    let mut x = g.transpose();
    for mut col in x.column_iter_mut() {
        factor.forward(col.as_mut_slice());
    }
    let h = x.transpose() * &x;
    let eig = symmetric_eigen(&h);
    let mu_max = eig.values.iter().cloned().fold(0.0, f64::max);
    let finite: Vec<usize> = (0..r)
        .rev()
        .filter(|&i| mu_max > 0.0 && eig.values[i] > RANK_THRESHOLD * mu_max)
        .collect();
    if k_max > finite.len() {
        return Err(Error::TooFewFinite {
            requested: k_max,
            available: finite.len(),
        });
    }

    let a_frob = a.as_matrix().norm();
    let mut values = Vec::with_capacity(k_max);
    let mut vectors = DMatrix::zeros(n, k_max);
    let mut residuals = Vec::with_capacity(k_max);
    for (col, &idx) in finite.iter().take(k_max).enumerate() {
        let mu = eig.values[idx];
        let mut v = &x * eig.vectors.column(idx) / mu;
        factor.backward(v.as_mut_slice());
        align_sign(&mut v);
        // Rayleigh quotient correction
        let bv = b.as_matrix() * &v;
        let mut res = a.as_matrix() * &v - &bv / mu;
        let lambda = 1.0 / mu + v.dot(&res) / v.dot(&bv);
        res -= &bv * (lambda - 1.0 / mu);
        residuals.push(res.norm() / (a_frob * v.norm()));
        values.push(lambda);
        vectors.set_column(col, &v);
    }
    Ok(EigenSolution {
        values,
        vectors,
        finite_count: finite.len(),
        residuals,
    })
}

/// `G` with `B = G^T G`, built from an eigen-decomposition of `B` restricted
/// to the rows it actually touches.
fn trace_factor(b: &SymmetricMatrix) -> Result<DMatrix<f64>> {
    let bm = b.as_matrix();
    let n = bm.nrows();
    let support: Vec<usize> = (0..n)
        .filter(|&i| bm.row(i).iter().any(|&v| v != 0.0))
        .collect();
    let bs = b.restrict(&support);
    let eig = symmetric_eigen(bs.as_matrix());
    let beta_max = eig.values.iter().cloned().fold(0.0, f64::max);
    let beta_min = eig.values.iter().cloned().fold(0.0, f64::min);
    if beta_min < -1e-8 * beta_max {
        return Err(Error::NotPositiveDefinite {
            pivot: 0,
            value: beta_min,
        });
    }
    let kept: Vec<usize> = (0..support.len())
        .filter(|&i| eig.values[i] > RANK_THRESHOLD * beta_max)
        .collect();
    let mut g = DMatrix::zeros(kept.len(), n);
    for (row, &i) in kept.iter().enumerate() {
        let s = eig.values[i].sqrt();
        for (k, &dof) in support.iter().enumerate() {
            g[(row, dof)] = s * eig.vectors[(k, i)];
        }
    }
    Ok(g)
}

/// Makes the entry of largest magnitude positive.
fn align_sign(v: &mut DVector<f64>) {
    if v.is_empty() {
        return;
    }
    let imax = v.iamax();
    if v[imax] < 0.0 {
        v.neg_mut();
    }
}
