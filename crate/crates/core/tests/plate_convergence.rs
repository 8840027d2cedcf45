use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

use thin_steklov::plate2d::{
    assemble_plate_forms, assemble_plate_forms_with, rayleigh_plate, solve_steklov_2d, BfsField,
    Mesh2D,
};
use thin_steklov::sturm1d::{assemble_limit_pencil, solve_limit_eigs, Mesh1D};
use thin_steklov::{ProblemParams, Profile};

fn first_eigenvalue(profile: &Profile, eps: f64, nx: usize, ny: usize) -> f64 {
    let p = ProblemParams::new(2, 0.3, 1.0, 1.0).with_epsilon(eps);
    let pencil = assemble_plate_forms(&p, profile, &Mesh2D::uniform(1.0, nx, ny).unwrap()).unwrap();
    solve_steklov_2d(&pencil, 1).unwrap().values[0]
}

#[test]
fn refinement_changes_first_eigenvalue_by_less_than_half_a_percent() {
    for profile in [Profile::constant(1.0, 1.0).unwrap(), Profile::cosine_bump(1.0, 0.3, 1.0).unwrap()] {
        for eps in [0.2, 0.05] {
            let coarse = first_eigenvalue(&profile, eps, 32, 4);
            let fine = first_eigenvalue(&profile, eps, 64, 8);
            assert!((coarse - fine).abs() < 5e-3 * fine, "{coarse} vs {fine}");
        }
    }
}

#[test]
fn ratio_to_limit_is_near_one_for_thin_strip() {
    let profile = Profile::constant(1.0, 1.0).unwrap();
    let p = ProblemParams::new(2, 0.3, 1.0, 1.0);
    let limit = assemble_limit_pencil(&p, &profile, &Mesh1D::uniform(1.0, 128).unwrap()).unwrap();
    let lambda_1 = solve_limit_eigs(&limit, 1).unwrap().values[0];
    let ratio = first_eigenvalue(&profile, 0.05, 64, 4) / (0.05 * lambda_1);
    assert!((0.8..=1.2).contains(&ratio), "{ratio}");
}

#[test]
fn quadrature_order_does_not_move_polynomial_profile_eigenvalue() {
    let profile = Profile::polynomial(vec![1.0, 0.2], 1.0).unwrap();
    let p = ProblemParams::new(2, 0.3, 1.0, 1.0).with_epsilon(0.1);
    let mesh = Mesh2D::uniform(1.0, 32, 4).unwrap();
    let l4 = solve_steklov_2d(&assemble_plate_forms_with(&p, &profile, &mesh, 4).unwrap(), 1).unwrap();
    let l6 = solve_steklov_2d(&assemble_plate_forms_with(&p, &profile, &mesh, 6).unwrap(), 1).unwrap();
    assert!((l4.values[0] - l6.values[0]).abs() < 1e-8 * l6.values[0]);
}

#[test]
fn eigenvectors_are_orthonormal_on_the_boundary() {
    let profile = Profile::cosine_bump(1.0, 0.3, 1.0).unwrap();
    let p = ProblemParams::new(2, 0.3, 1.0, 1.0).with_epsilon(0.1);
    let pencil = assemble_plate_forms(&p, &profile, &Mesh2D::uniform(1.0, 32, 2).unwrap()).unwrap();
    let sol = solve_steklov_2d(&pencil, 4).unwrap();
    let gram = sol.vectors.transpose() * pencil.b.as_matrix() * &sol.vectors;
    assert!((gram - DMatrix::identity(4, 4)).amax() < 1e-9);
    assert!(sol.values.iter().all(|&l| l > 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rayleigh_quotient_bounds_first_eigenvalue(
        coeffs in prop::collection::vec(-1.0f64..1.0, 4 * 17 * 3),
        scale in 0.1f64..10.0,
    ) {
        let profile = Profile::cosine_bump(1.0, 0.3, 1.0).unwrap();
        let p = ProblemParams::new(2, 0.3, 1.0, 1.0).with_epsilon(0.1);
        let mesh = Mesh2D::uniform(1.0, 16, 2).unwrap();
        let pencil = assemble_plate_forms(&p, &profile, &mesh).unwrap();
        let lambda_1 = solve_steklov_2d(&pencil, 1).unwrap().values[0];

        let mut c = DVector::from_vec(coeffs);
        for (i, fixed) in pencil.clamp.iter().enumerate() {
            if *fixed {
                c[i] = 0.0;
            }
        }
        prop_assume!(pencil.b.quadratic_form(&c) > 1e-8);
        let field = BfsField::from_coeffs(&mesh, c.as_slice().to_vec()).unwrap();
        let q = rayleigh_plate(&pencil, &field).unwrap();
        prop_assert!(q >= lambda_1 * (1.0 - 1e-9));

        let mut scaled = field.clone();
        scaled.scale(scale);
        let qs = rayleigh_plate(&pencil, &scaled).unwrap();
        prop_assert!((qs - q).abs() < 1e-12 * q);
    }
}
