use nalgebra::{DMatrix, DVector};

/// Eigen-decomposition of a symmetric matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: DVector<f64>,
    /// Orthonormal eigenvectors as columns, matching `values`.
    pub vectors: DMatrix<f64>,
}

/// Symmetric eigen-decomposition, sorted ascending.
///
/// Only the upper triangle of `a` is read.
pub fn symmetric_eigen(a: &DMatrix<f64>) -> SymmetricEigen {
    assert!(a.is_square());
    let n = a.nrows();
    let sym = DMatrix::from_fn(n, n, |i, j| if i <= j { a[(i, j)] } else { a[(j, i)] });
    let eig = nalgebra::SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let vectors = DMatrix::from_fn(n, n, |k, col| eig.eigenvectors[(k, order[col])]);
    SymmetricEigen { values, vectors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn random_reconstruction_and_orthonormality() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let r = DMatrix::from_fn(10, 10, |_, _| rng.gen_range(-1.0..1.0));
            let a = &r + r.transpose();
            let eig = symmetric_eigen(&a);
            let recon =
                &eig.vectors * DMatrix::from_diagonal(&eig.values) * eig.vectors.transpose();
            assert!((recon - &a).amax() < 1e-10);
            let gram = eig.vectors.transpose() * &eig.vectors;
            assert!((gram - DMatrix::identity(10, 10)).amax() < 1e-12);
            assert!(eig.values.as_slice().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn diagonal_input() {
        let a = DMatrix::from_diagonal(&DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let eig = symmetric_eigen(&a);
        assert_eq!(eig.values.as_slice(), &[-1.0, 2.0, 3.0]);
    }

    #[test]
    fn two_by_two() {
        let a = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let eig = symmetric_eigen(&a);
        assert!((eig.values[0] - 1.0).abs() < 1e-15);
        assert!((eig.values[1] - 3.0).abs() < 1e-15);
    }
}
