//! Dense symmetric pencils `A v = lambda B v` with `A` positive definite and
//! `B` positive semidefinite.
//!
//! The right-hand form of a Steklov problem only sees boundary coefficients,
//! so `B` has low rank. [`finite_pencil_eigs`] factors `B = G^T G` on its
//! support and solves an eigenproblem of boundary size instead of full size.

mod cholesky;
mod generalized;
mod symeig;

pub use cholesky::{factor_spd, solve_spd, CholeskyFactor};
pub use generalized::{finite_pencil_eigs, EigenSolution};
pub use symeig::{symmetric_eigen, SymmetricEigen};

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative asymmetry accepted when wrapping a dense matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// A dense symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    data: DMatrix<f64>,
}

impl SymmetricMatrix {
    /// Wraps `data` after checking `max|A - A^T| <= 1e-12 max|A|`.
    pub fn new(data: DMatrix<f64>) -> Result<Self> {
        if !data.is_square() {
            return Err(Error::DimensionMismatch {
                expected: data.nrows(),
                got: data.ncols(),
            });
        }
        let asym = relative_asymmetry(&data);
        if asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(asym));
        }
        Ok(Self { data })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            data: DMatrix::identity(n, n),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self {
            data: DMatrix::from_diagonal(&DVector::from_column_slice(diag)),
        }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.data
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.data
    }

    /// Keeps the rows and columns listed in `active`, in that order.
    pub fn restrict(&self, active: &[usize]) -> Self {
        let m = active.len();
        let data = DMatrix::from_fn(m, m, |i, j| self.data[(active[i], active[j])]);
        Self { data }
    }

    /// `self + tau * other`.
    pub fn add_scaled(&self, tau: f64, other: &SymmetricMatrix) -> Result<Self> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(Self {
            data: &self.data + &other.data * tau,
        })
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            data: &self.data * c,
        }
    }

    /// `x^T A x`.
    pub fn quadratic_form(&self, x: &DVector<f64>) -> f64 {
        x.dot(&(&self.data * x))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.amax()
    }
}

pub fn relative_asymmetry(m: &DMatrix<f64>) -> f64 {
    let scale = m.amax();
    if scale == 0.0 {
        return 0.0;
    }
    let mut worst: f64 = 0.0;
    for j in 0..m.ncols() {
        for i in 0..j {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.1, 1.0]);
        assert!(matches!(
            SymmetricMatrix::new(m),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn restrict_deletes_rows_and_columns() {
        let m = DMatrix::from_fn(4, 4, |i, j| (i + j) as f64);
        let s = SymmetricMatrix::new(m).unwrap().restrict(&[0, 2]);
        assert_eq!(s.as_matrix(), &DMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 4.0]));
    }
}
