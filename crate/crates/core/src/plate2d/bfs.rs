//! Bogner-Fox-Schmidt bicubic shape functions.

use crate::hermite;

/// Per-node coefficient slots: `u, u_x, u_y, u_xy`.
pub const SLOTS: usize = 4;

/// Reference value and derivatives `[u, u_x, u_y, u_xx, u_xy, u_yy]` of the 16
/// local basis functions of the element `[xa, xa + hx] x [ya, ya + hy]` at
/// local coordinates `(s, t)` in the unit square.
///
/// Local index is `4 * corner + slot` with corners ordered
/// `(0,0), (1,0), (0,1), (1,1)`.
pub fn shape(s: f64, t: f64, hx: f64, hy: f64) -> [[f64; 6]; 16] {
    let hx_s = hermite::shape(s, hx);
    let hy_s = hermite::shape(t, hy);
    let mut out = [[0.0; 6]; 16];
    for corner in 0..4 {
        let (cx, cy) = (corner % 2, corner / 2);
        for slot in 0..SLOTS {
            let ix = 2 * cx + (slot & 1);
            let iy = 2 * cy + (slot >> 1);
            let x = |d: usize| hx_s[d][ix];
            let y = |d: usize| hy_s[d][iy];
            out[4 * corner + slot] = [
                x(0) * y(0),
                x(1) * y(0),
                x(0) * y(1),
                x(2) * y(0),
                x(1) * y(1),
                x(0) * y(2),
            ];
        }
    }
    out
}
