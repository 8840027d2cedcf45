//! Cubic Hermite shape functions on an interval.

/// Shape functions on `[xa, xa + h]` at local coordinate `t = (x - xa)/h`.
///
/// Index order is (value at left, slope at left, value at right, slope at
/// right). Rows are the function values and first and second derivatives
/// with respect to `x`.
pub fn shape(t: f64, h: f64) -> [[f64; 4]; 3] {
    let t2 = t * t;
    let t3 = t2 * t;
    let value = [
        1.0 - 3.0 * t2 + 2.0 * t3,
        h * (t - 2.0 * t2 + t3),
        3.0 * t2 - 2.0 * t3,
        h * (t3 - t2),
    ];
    let d1 = [
        (6.0 * t2 - 6.0 * t) / h,
        1.0 - 4.0 * t + 3.0 * t2,
        (6.0 * t - 6.0 * t2) / h,
        3.0 * t2 - 2.0 * t,
    ];
    let d2 = [
        (12.0 * t - 6.0) / (h * h),
        (6.0 * t - 4.0) / h,
        (6.0 - 12.0 * t) / (h * h),
        (6.0 * t - 2.0) / h,
    ];
    [value, d1, d2]
}

/// Index of the interval of the sorted grid `nodes` that contains `x`.
///
/// `x` is assumed to lie in `[nodes[0], nodes[last]]`; the last interval is
/// closed on the right.
pub fn locate(nodes: &[f64], x: f64) -> usize {
    let last = nodes.len() - 2;
    match nodes.binary_search_by(|v| v.total_cmp(&x)) {
        Ok(i) => i.min(last),
        Err(i) => i.saturating_sub(1).min(last),
    }
}
