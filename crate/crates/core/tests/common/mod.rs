//! Independent oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the solver paths it checks.

#![allow(dead_code)]

use std::f64::consts::PI;

use nalgebra::DMatrix;

/// `k`-th root of `cos b cosh b = 1` by bisection on `cos b - 1/cosh b`.
pub fn beam_root(k: usize) -> f64 {
    let f = |b: f64| b.cos() - 1.0 / b.cosh();
    let centre = (k as f64 + 0.5) * PI;
    let (mut lo, mut hi) = (centre - 0.5, centre + 0.5);
    assert!(f(lo) * f(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Clamped-clamped beam eigenvalue `(beta_k / 2l)^4` on `[-l, l]`.
pub fn beam_eigenvalue(k: usize, l: f64) -> f64 {
    (beam_root(k) / (2.0 * l)).powi(4)
}

/// Real roots of `det(A - lambda B) = 0` on `(lo, hi)`, found by a
/// logarithmic scan for sign changes followed by bisection.
pub fn determinant_roots(a: &DMatrix<f64>, b: &DMatrix<f64>, lo: f64, hi: f64) -> Vec<f64> {
    let det = |l: f64| (a - b * l).determinant();
    let steps = 200_000;
    let grid: Vec<f64> = (0..=steps)
        .map(|i| lo * (hi / lo).powf(i as f64 / steps as f64))
        .collect();
    let mut roots = Vec::new();
    let mut prev = det(grid[0]);
    for w in grid.windows(2) {
        let next = det(w[1]);
        if prev == 0.0 {
            roots.push(w[0]);
        } else if prev * next < 0.0 {
            let (mut x0, mut x1) = (w[0], w[1]);
            let mut f0 = prev;
            for _ in 0..200 {
                let mid = 0.5 * (x0 + x1);
                let fm = det(mid);
                if f0 * fm <= 0.0 {
                    x1 = mid;
                } else {
                    x0 = mid;
                    f0 = fm;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
        prev = next;
    }
    roots
}

const GAUSS4: [(f64, f64); 4] = [
    (-0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
    (-0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
];

/// Hermite cubic basis on an interval of length `h`, local `t` in `[0, 1]`,
/// as (values, first, second derivatives) in physical units.
fn hermite(t: f64, h: f64) -> [[f64; 4]; 3] {
    [
        [
            2.0 * t.powi(3) - 3.0 * t * t + 1.0,
            h * (t.powi(3) - 2.0 * t * t + t),
            -2.0 * t.powi(3) + 3.0 * t * t,
            h * (t.powi(3) - t * t),
        ],
        [
            (6.0 * t * t - 6.0 * t) / h,
            3.0 * t * t - 4.0 * t + 1.0,
            (-6.0 * t * t + 6.0 * t) / h,
            3.0 * t * t - 2.0 * t,
        ],
        [
            (12.0 * t - 6.0) / (h * h),
            (6.0 * t - 4.0) / h,
            (-12.0 * t + 6.0) / (h * h),
            (6.0 * t - 2.0) / h,
        ],
    ]
}

/// Plate forms assembled directly on the physical rectangle
/// `[-l, l] x [-half, half]` with unmapped BFS elements and physical slots
/// `(u, u_1, u_2, u_12)`, nodes numbered with `x2` fastest.
pub struct PhysicalForms {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
}

pub fn physical_rectangle_forms(
    l: f64,
    half: f64,
    nx: usize,
    ny: usize,
    sigma: f64,
    mu: f64,
) -> PhysicalForms {
    let xs: Vec<f64> = (0..=nx).map(|i| -l + 2.0 * l * i as f64 / nx as f64).collect();
    let ys: Vec<f64> = (0..=ny).map(|j| -half + 2.0 * half * j as f64 / ny as f64).collect();
    let nodes_y = ny + 1;
    let ndof = 4 * (nx + 1) * (ny + 1);
    let mut a = DMatrix::zeros(ndof, ndof);
    let mut b = DMatrix::zeros(ndof, ndof);

    for ex in 0..nx {
        for ey in 0..ny {
            let hx = xs[ex + 1] - xs[ex];
            let hy = ys[ey + 1] - ys[ey];
            let mut dofs = Vec::with_capacity(16);
            let mut pairs = Vec::with_capacity(16);
            for corner in 0..4 {
                let (cx, cy) = (corner % 2, corner / 2);
                let node = (ex + cx) * nodes_y + ey + cy;
                for slot in 0..4 {
                    dofs.push(4 * node + slot);
                    pairs.push((2 * cx + (slot & 1), 2 * cy + (slot >> 1)));
                }
            }
            // basis i at (x, y): (u, u_1, u_2, u_11, u_12, u_22)
            let basis = |s: f64, t: f64| -> Vec<[f64; 6]> {
                let (bx, by) = (hermite(s, hx), hermite(t, hy));
                pairs
                    .iter()
                    .map(|&(ix, iy)| {
                        [
                            bx[0][ix] * by[0][iy],
                            bx[1][ix] * by[0][iy],
                            bx[0][ix] * by[1][iy],
                            bx[2][ix] * by[0][iy],
                            bx[1][ix] * by[1][iy],
                            bx[0][ix] * by[2][iy],
                        ]
                    })
                    .collect()
            };
            for &(gs, ws) in &GAUSS4 {
                for &(gt, wt) in &GAUSS4 {
                    let (s, t) = (0.5 * (gs + 1.0), 0.5 * (gt + 1.0));
                    let w = ws * wt * 0.25 * hx * hy;
                    let phi = basis(s, t);
                    for i in 0..16 {
                        for j in 0..16 {
                            let (p, q) = (&phi[i], &phi[j]);
                            let hess = p[3] * q[3] + 2.0 * p[4] * q[4] + p[5] * q[5];
                            let lap = (p[3] + p[5]) * (q[3] + q[5]);
                            a[(dofs[i], dofs[j])] += w * ((1.0 - sigma) * hess + sigma * lap);
                        }
                    }
                }
            }
            for (on_edge, t, outward) in [(ey == 0, 0.0, -1.0), (ey + 1 == ny, 1.0, 1.0)] {
                if !on_edge {
                    continue;
                }
                for &(gs, ws) in &GAUSS4 {
                    let s = 0.5 * (gs + 1.0);
                    let w = ws * 0.5 * hx;
                    let phi = basis(s, t);
                    for i in 0..16 {
                        for j in 0..16 {
                            let (p, q) = (&phi[i], &phi[j]);
                            a[(dofs[i], dofs[j])] += w * mu * (outward * p[2]) * (outward * q[2]);
                            b[(dofs[i], dofs[j])] += w * p[0] * q[0];
                        }
                    }
                }
            }
        }
    }
    PhysicalForms { a, b }
}
