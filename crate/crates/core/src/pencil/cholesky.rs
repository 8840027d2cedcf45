use nalgebra::{DMatrix, DVector};

use super::SymmetricMatrix;
use crate::error::{Error, Result};

/// Lower-triangular Cholesky factor stored row-major over the row envelope.
///
/// Finite element matrices with a sensible node ordering are banded, and the
/// factor inherits the envelope of `A`: entries left of the first nonzero in
/// each row stay zero and are skipped.
#[derive(Debug, Clone)]
pub struct CholeskyFactor {
    n: usize,
    first: Vec<usize>,
    rows: Vec<f64>,
}

/// `A = L L^T` for a symmetric positive definite `A`.
///
/// Fails with the index of the first non-positive pivot.
pub fn factor_spd(a: &SymmetricMatrix) -> Result<CholeskyFactor> {
    let m = a.as_matrix();
    let n = m.nrows();
    let first: Vec<usize> = (0..n)
        .map(|i| (0..i).find(|&j| m[(i, j)] != 0.0).unwrap_or(i))
        .collect();
    let mut rows = vec![0.0; n * n];
    for i in 0..n {
        let fi = first[i];
        for j in fi..=i {
            let fj = first[j];
            let k0 = fi.max(fj);
            let (ri, rj) = (&rows[i * n..i * n + j], &rows[j * n..j * n + j]);
            let dot: f64 = ri[k0..j].iter().zip(&rj[k0..j]).map(|(x, y)| x * y).sum();
            let s = m[(i, j)] - dot;
            if i == j {
                if !(s > 0.0) || !s.is_finite() {
                    return Err(Error::NotPositiveDefinite { pivot: i, value: s });
                }
                rows[i * n + i] = s.sqrt();
            } else {
                rows[i * n + j] = s / rows[j * n + j];
            }
        }
    }
    Ok(CholeskyFactor { n, first, rows })
}

impl CholeskyFactor {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Dense copy of `L`.
    pub fn l(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| {
            if j <= i {
                self.rows[i * self.n + j]
            } else {
                0.0
            }
        })
    }

    /// Smallest diagonal entry of `L` squared, a lower bound proxy for conditioning.
    pub fn min_pivot(&self) -> f64 {
        (0..self.n)
            .map(|i| self.rows[i * self.n + i].powi(2))
            .fold(f64::INFINITY, f64::min)
    }

    /// Solves `L y = b` in place.
    pub fn forward(&self, b: &mut [f64]) {
        let n = self.n;
        for i in 0..n {
            let row = &self.rows[i * n..i * n + i];
            let fi = self.first[i];
            let dot: f64 = row[fi..].iter().zip(&b[fi..i]).map(|(x, y)| x * y).sum();
            b[i] = (b[i] - dot) / self.rows[i * n + i];
        }
    }

    /// Solves `L^T x = y` in place.
    pub fn backward(&self, y: &mut [f64]) {
        let n = self.n;
        for i in (0..n).rev() {
            let xi = y[i] / self.rows[i * n + i];
            y[i] = xi;
            let fi = self.first[i];
            for (k, lik) in (fi..i).zip(&self.rows[i * n + fi..i * n + i]) {
                y[k] -= lik * xi;
            }
        }
    }

    pub fn solve(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let mut x = rhs.clone();
        self.forward(x.as_mut_slice());
        self.backward(x.as_mut_slice());
        x
    }
}

/// Solves `A x = rhs` by Cholesky with one step of iterative refinement.
pub fn solve_spd(a: &SymmetricMatrix, rhs: &DVector<f64>) -> Result<DVector<f64>> {
    if rhs.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: rhs.len(),
        });
    }
    let factor = factor_spd(a)?;
    let mut x = factor.solve(rhs);
    let residual = rhs - a.as_matrix() * &x;
    x += factor.solve(&residual);
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::SingularSystem);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_spd(n: usize, seed: u64) -> SymmetricMatrix {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let m = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        let a = m.transpose() * &m + DMatrix::identity(n, n);
        SymmetricMatrix::new((&a + a.transpose()) * 0.5).unwrap()
    }

    #[test]
    fn identity_and_diagonal() {
        let f = factor_spd(&SymmetricMatrix::identity(3)).unwrap();
        assert_eq!(f.l(), DMatrix::identity(3, 3));
        let f = factor_spd(&SymmetricMatrix::from_diagonal(&[4.0, 9.0])).unwrap();
        assert_eq!(f.l(), DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 3.0]));
    }

    #[test]
    fn random_reconstruction() {
        let a = random_spd(50, 7);
        let l = factor_spd(&a).unwrap().l();
        let err = (&l * l.transpose() - a.as_matrix()).amax();
        assert!(err < 1e-10, "reconstruction error {err:e}");
    }

    #[test]
    fn banded_envelope_is_respected() {
        let n = 30;
        let a = DMatrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
            0 => 4.0,
            1 => -1.0,
            _ => 0.0,
        });
        let a = SymmetricMatrix::new(a).unwrap();
        let l = factor_spd(&a).unwrap().l();
        assert!((&l * l.transpose() - a.as_matrix()).amax() < 1e-14);
        assert_eq!(l[(5, 3)], 0.0);
    }

    #[test]
    fn indefinite_reports_pivot() {
        let a = SymmetricMatrix::from_diagonal(&[1.0, 2.0, -1.0, 3.0]);
        assert!(matches!(
            factor_spd(&a),
            Err(Error::NotPositiveDefinite { pivot: 2, .. })
        ));
    }

    #[test]
    fn solves() {
        let b = DVector::from_vec(vec![1.0, -2.0, 3.0]);
        assert_eq!(solve_spd(&SymmetricMatrix::identity(3), &b).unwrap(), b);
        let x = solve_spd(
            &SymmetricMatrix::from_diagonal(&[2.0, 4.0]),
            &DVector::from_vec(vec![2.0, 8.0]),
        )
        .unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn manufactured_solution() {
        let a = random_spd(100, 11);
        let xs = DVector::from_fn(100, |i, _| (i as f64 * 0.37).sin() + 0.1);
        let rhs = a.as_matrix() * &xs;
        let x = solve_spd(&a, &rhs).unwrap();
        assert!((&x - &xs).norm() / xs.norm() < 1e-9);
        let res = (a.as_matrix() * &x - &rhs).norm() / rhs.norm();
        assert!(res < 1e-11);
    }
}
