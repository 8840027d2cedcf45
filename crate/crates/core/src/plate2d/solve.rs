use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::pencil::{finite_pencil_eigs, solve_spd, EigenSolution};

use super::{BfsField, PlatePencil};

impl PlatePencil {
    fn expand(&self, active: &[usize], reduced: &DVector<f64>) -> DVector<f64> {
        let mut full = DVector::zeros(self.clamp.len());
        for (&i, &v) in active.iter().zip(reduced.iter()) {
            full[i] = v;
        }
        full
    }

    fn clamped(&self, coeffs: &[f64]) -> DVector<f64> {
        DVector::from_iterator(
            coeffs.len(),
            coeffs
                .iter()
                .zip(&self.clamp)
                .map(|(&c, &fixed)| if fixed { 0.0 } else { c }),
        )
    }

    /// Eigenvector `k` of `solution` as a field.
    pub fn field(&self, solution: &EigenSolution, k: usize) -> Result<BfsField> {
        BfsField::from_coeffs(&self.mesh, solution.vector(k).as_slice().to_vec())
    }
}

/// Smallest `k_max` Steklov eigenvalues, eigenvectors orthonormal in the
/// boundary mass. Vectors are full length with zeros on clamped slots.
pub fn solve_steklov_2d(pencil: &PlatePencil, k_max: usize) -> Result<EigenSolution> {
    let active = pencil.active();
    let reduced = finite_pencil_eigs(&pencil.a.restrict(&active), &pencil.b.restrict(&active), k_max)?;
    let mut vectors = DMatrix::zeros(pencil.clamp.len(), k_max);
    for c in 0..k_max {
        vectors.set_column(c, &pencil.expand(&active, &reduced.vector(c)));
    }
    Ok(EigenSolution {
        vectors,
        ..reduced
    })
}

/// Solves `(A + tau B) u = B f` on the clamped subspace.
pub fn solve_penalized_source(pencil: &PlatePencil, f: &BfsField, tau: f64) -> Result<BfsField> {
    if !(tau > 0.0) {
        return Err(Error::NonPositive {
            name: "penalty",
            value: tau,
        });
    }
    if f.coeffs.len() != pencil.clamp.len() {
        return Err(Error::DimensionMismatch {
            expected: pencil.clamp.len(),
            got: f.coeffs.len(),
        });
    }
    let active = pencil.active();
    let rhs_full = pencil.b.as_matrix() * DVector::from_column_slice(&f.coeffs);
    let rhs = DVector::from_iterator(active.len(), active.iter().map(|&i| rhs_full[i]));
    let system = pencil.a.add_scaled(tau, &pencil.b)?.restrict(&active);
    let u = solve_spd(&system, &rhs)?;
    BfsField::from_coeffs(&pencil.mesh, pencil.expand(&active, &u).as_slice().to_vec())
}

/// `c^T A c / c^T B c` with clamped slots zeroed.
pub fn rayleigh_plate(pencil: &PlatePencil, field: &BfsField) -> Result<f64> {
    if field.coeffs.len() != pencil.clamp.len() {
        return Err(Error::DimensionMismatch {
            expected: pencil.clamp.len(),
            got: field.coeffs.len(),
        });
    }
    let c = pencil.clamped(&field.coeffs);
    let den = pencil.b.quadratic_form(&c);
    if !(den > 0.0) {
        return Err(Error::ZeroTrace);
    }
    Ok(pencil.a.quadratic_form(&c) / den)
}
