use crate::error::{Error, Result};
use crate::hermite;

use super::Mesh1D;

/// Piecewise cubic `C^1` function stored as (value, slope) per node.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteField {
    pub mesh: Mesh1D,
    /// `[v_0, v'_0, v_1, v'_1, ...]`.
    pub coeffs: Vec<f64>,
}

impl HermiteField {
    pub fn zeros(mesh: &Mesh1D) -> Self {
        Self {
            mesh: mesh.clone(),
            coeffs: vec![0.0; 2 * mesh.nodes.len()],
        }
    }

    pub fn from_coeffs(mesh: &Mesh1D, coeffs: Vec<f64>) -> Result<Self> {
        let expected = 2 * mesh.nodes.len();
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            mesh: mesh.clone(),
            coeffs,
        })
    }

    /// Hermite interpolant of `f` given with its derivative.
    pub fn interpolate(mesh: &Mesh1D, f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64) -> Self {
        let coeffs = mesh.nodes.iter().flat_map(|&x| [f(x), df(x)]).collect();
        Self {
            mesh: mesh.clone(),
            coeffs,
        }
    }

    pub fn value_coeffs(&self) -> impl Iterator<Item = f64> + '_ {
        self.coeffs.iter().step_by(2).copied()
    }

    pub fn scale(&mut self, c: f64) {
        self.coeffs.iter_mut().for_each(|v| *v *= c);
    }

    /// `(v, v', v'')` at `x1`.
    pub fn eval(&self, x1: f64) -> Result<(f64, f64, f64)> {
        let l = self.mesh.l();
        if !(x1.abs() <= l * (1.0 + 1e-12)) {
            return Err(Error::OutOfDomain { x: x1, l });
        }
        let nodes = &self.mesh.nodes;
        let e = hermite::locate(nodes, x1);
        let h = nodes[e + 1] - nodes[e];
        let s = hermite::shape((x1 - nodes[e]) / h, h);
        let c = &self.coeffs[2 * e..2 * e + 4];
        let dot = |row: &[f64; 4]| row.iter().zip(c).map(|(a, b)| a * b).sum::<f64>();
        Ok((dot(&s[0]), dot(&s[1]), dot(&s[2])))
    }
}

/// Evaluation operation on a Hermite field.
pub fn eval_field_1d(field: &HermiteField, x1: f64) -> Result<(f64, f64, f64)> {
    field.eval(x1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_reproduced() {
        let mesh = Mesh1D::uniform(1.0, 5).unwrap();
        let f = HermiteField::interpolate(&mesh, |x| x * x * x, |x| 3.0 * x * x);
        for i in 0..=50 {
            let x = -1.0 + 2.0 * i as f64 / 50.0;
            let (v, dv, ddv) = f.eval(x).unwrap();
            assert!((v - x * x * x).abs() < 1e-14);
            assert!((dv - 3.0 * x * x).abs() < 1e-13);
            assert!((ddv - 6.0 * x).abs() < 1e-11);
        }
    }

    #[test]
    fn zeros_and_nodal() {
        let mesh = Mesh1D::uniform(1.0, 4).unwrap();
        let z = HermiteField::zeros(&mesh);
        assert_eq!(z.eval(0.3).unwrap(), (0.0, 0.0, 0.0));
        let mut f = HermiteField::zeros(&mesh);
        f.coeffs[2 * 2] = 1.0;
        let (v, dv, _) = f.eval(0.0).unwrap();
        assert_eq!((v, dv), (1.0, 0.0));
        assert!(matches!(f.eval(1.1), Err(Error::OutOfDomain { .. })));
    }
}
