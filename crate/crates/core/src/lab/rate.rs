use crate::error::{Error, Result};

/// Least-squares slope of `log(deviation)` against `log(eps)`.
pub fn estimate_rate(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.len() < 3 {
        return Err(Error::DegenerateFit("at least three (eps, deviation) pairs are needed"));
    }
    for (index, &(eps, dev)) in pairs.iter().enumerate() {
        if !(eps > 0.0) {
            return Err(Error::NonPositive {
                name: "epsilon",
                value: eps,
            });
        }
        if !(dev > 0.0) {
            return Err(Error::NonPositiveDeviation { index, value: dev });
        }
    }
    let n = pairs.len() as f64;
    let xs: Vec<f64> = pairs.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 1e-14 * n {
        return Err(Error::DegenerateFit("log(eps) has zero variance"));
    }
    Ok(sxy / sxx)
}
