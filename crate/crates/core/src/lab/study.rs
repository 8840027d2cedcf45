use rayon::prelude::*;

use super::config::{StudyConfig, StudyMode};
use super::rate::estimate_rate;
use super::report::{ConvergenceReport, RateFit, ReportRow};
use crate::constants::unit_ball_volume;
use crate::error::{Error, Result};
use crate::params::ProblemParams;
use crate::plate2d::{self, trace_on_gamma, BfsField, Side};
use crate::profile::Profile;
use crate::sturm1d::{self, HermiteField};

/// Sample count for trace comparisons on `[-l, l]`.
pub const TRACE_SAMPLES: usize = 512;

/// Relative gap below which neighbouring limit eigenvalues form a cluster.
pub const CLUSTER_GAP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceComparison {
    /// `|s M(u) - v| / |v|` in `L^2(-l, l)`.
    pub error: f64,
    pub sign: f64,
}

struct TraceSamples {
    xs: Vec<f64>,
    /// Trapezoid weights.
    weights: Vec<f64>,
}

impl TraceSamples {
    fn new(l: f64) -> Self {
        let n = TRACE_SAMPLES;
        let h = 2.0 * l / (n - 1) as f64;
        let xs = (0..n).map(|i| (-l + h * i as f64).clamp(-l, l)).collect();
        let weights = (0..n)
            .map(|i| if i == 0 || i == n - 1 { 0.5 * h } else { h })
            .collect();
        Self { xs, weights }
    }

    fn inner(&self, f: &[f64], g: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(f.iter().zip(g))
            .map(|(w, (a, b))| w * a * b)
            .sum()
    }
}

/// Average of the two lateral traces, rescaled to unit norm in
/// `L^2((n-1) w_{n-1} rho^{n-2} dx)`.
fn averaged_trace(
    samples: &TraceSamples,
    field: &BfsField,
    params: &ProblemParams,
    profile: &Profile,
) -> Result<Vec<f64>> {
    let mut m = samples
        .xs
        .iter()
        .map(|&x| Ok(0.5 * (trace_on_gamma(field, Side::Top, x)? + trace_on_gamma(field, Side::Bottom, x)?)))
        .collect::<Result<Vec<f64>>>()?;
    let w = unit_ball_volume(params.n - 1)? * (params.n - 1) as f64;
    let weighted = samples
        .xs
        .iter()
        .map(|&x| Ok(w * profile.rho(x)?.powi(params.n as i32 - 2)))
        .collect::<Result<Vec<f64>>>()?;
    let m2: Vec<f64> = m.iter().zip(&weighted).map(|(a, b)| a * a * b).collect();
    let norm = samples.inner(&m2, &vec![1.0; m2.len()]).sqrt();
    if !(norm > 0.0) {
        return Err(Error::ZeroTrace);
    }
    m.iter_mut().for_each(|v| *v /= norm);
    Ok(m)
}

fn sample_1d(samples: &TraceSamples, v: &HermiteField) -> Result<Vec<f64>> {
    samples.xs.iter().map(|&x| Ok(v.eval(x)?.0)).collect()
}

/// Sign-aligned relative `L^2` distance between the averaged boundary trace
/// of a 2D eigenfunction and a limit eigenfunction.
pub fn compare_eigenfunction_traces(
    field_2d: &BfsField,
    v_k: &HermiteField,
    params: &ProblemParams,
    profile: &Profile,
) -> Result<TraceComparison> {
    let samples = TraceSamples::new(profile.l);
    let m = averaged_trace(&samples, field_2d, params, profile)?;
    let v = sample_1d(&samples, v_k)?;
    Ok(aligned(&samples, &m, &v))
}

fn aligned(samples: &TraceSamples, m: &[f64], v: &[f64]) -> TraceComparison {
    let vv = samples.inner(v, v);
    let mv = samples.inner(m, v);
    let mm = samples.inner(m, m);
    let sign = if mv >= 0.0 { 1.0 } else { -1.0 };
    let dist2 = (mm - 2.0 * sign * mv + vv).max(0.0);
    TraceComparison {
        error: (dist2 / vv).sqrt(),
        sign,
    }
}

/// Relative distance from the averaged trace to the span of `vs`.
fn subspace_error(samples: &TraceSamples, m: &[f64], vs: &[Vec<f64>]) -> f64 {
    let k = vs.len();
    let gram = nalgebra::DMatrix::from_fn(k, k, |i, j| samples.inner(&vs[i], &vs[j]));
    let rhs = nalgebra::DVector::from_fn(k, |i, _| samples.inner(&vs[i], m));
    let coef = gram.lu().solve(&rhs).unwrap_or_else(|| nalgebra::DVector::zeros(k));
    let mut r = m.to_vec();
    for (c, v) in coef.iter().zip(vs) {
        r.iter_mut().zip(v).for_each(|(ri, vi)| *ri -= c * vi);
    }
    (samples.inner(&r, &r) / samples.inner(m, m)).sqrt()
}

/// Groups of limit eigenvalue indices closer than [`CLUSTER_GAP`].
fn clusters(values: &[f64]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, &v) in values.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if (v - values[*g.last().unwrap()]).abs() < CLUSTER_GAP * v.abs() => g.push(k),
            _ => groups.push(vec![k]),
        }
    }
    groups
}

struct EpsilonResult {
    lambda: Vec<f64>,
    trace_error: Vec<f64>,
}

pub fn run_convergence_study(config: &StudyConfig) -> Result<ConvergenceReport> {
    run_convergence_study_with(config, 1)
}

/// Runs the study; epsilon jobs are spread over `threads` workers and merged
/// in config order, so the report does not depend on the thread count.
pub fn run_convergence_study_with(config: &StudyConfig, threads: usize) -> Result<ConvergenceReport> {
    config.validate()?;
    let params = config.params();
    let profile = config.build_profile()?;
    let k_max = config.k_max;
    let wrap = |epsilon: Option<f64>, k: Option<usize>| {
        move |e: Error| Error::Study {
            epsilon,
            k,
            source: Box::new(e),
        }
    };

    let mesh_1d = sturm1d::Mesh1D::uniform(config.l, config.n1d).map_err(wrap(None, None))?;
    let limit = sturm1d::assemble_limit_pencil_with(&params, &profile, &mesh_1d, config.quad)
        .map_err(wrap(None, None))?;
    // one extra eigenvalue, when available, to see whether the last one is clustered
    let available = limit.active().len();
    let limit_sol = sturm1d::solve_limit_eigs(&limit, (k_max + 1).min(available))
        .map_err(wrap(None, None))?;
    if limit_sol.len() < k_max {
        return Err(wrap(None, Some(k_max))(Error::TooFewFinite {
            requested: k_max,
            available: limit_sol.len(),
        }));
    }
    let lambda_1d = &limit_sol.values;
    let fields_1d = (0..limit_sol.len())
        .map(|k| limit.eigenfunction(&limit_sol, k))
        .collect::<Result<Vec<_>>>()
        .map_err(wrap(None, None))?;
    let groups = clusters(lambda_1d);
    let group_of = |k: usize| groups.iter().find(|g| g.contains(&k)).unwrap();

    let mut report = ConvergenceReport::empty(config.clone());
    report.metadata.clustered_k = (0..k_max)
        .filter(|&k| group_of(k).len() > 1)
        .map(|k| k + 1)
        .collect();

    if config.mode == StudyMode::LimitOnly {
        report.rows = (0..k_max)
            .map(|k| ReportRow {
                epsilon: None,
                k: k + 1,
                lambda_2d: None,
                lambda_1d: lambda_1d[k],
                ratio: None,
                trace_error: None,
                nx: None,
                ny: None,
                n1d: config.n1d,
            })
            .collect();
        return Ok(report);
    }

    let epsilons: &[f64] = match config.mode {
        StudyMode::Single => &config.epsilons[..1],
        _ => &config.epsilons,
    };
    let samples = TraceSamples::new(config.l);
    let limit_samples = fields_1d
        .iter()
        .map(|f| sample_1d(&samples, f))
        .collect::<Result<Vec<_>>>()
        .map_err(wrap(None, None))?;

    let solve_eps = |eps: f64| -> Result<EpsilonResult> {
        let p = params.with_epsilon(eps);
        let mesh = plate2d::Mesh2D::uniform(config.l, config.nx, config.ny).map_err(wrap(Some(eps), None))?;
        let pencil = plate2d::assemble_plate_forms_with(&p, &profile, &mesh, config.quad)
            .map_err(wrap(Some(eps), None))?;
        let sol = plate2d::solve_steklov_2d(&pencil, k_max).map_err(wrap(Some(eps), None))?;
        let mut trace_error = Vec::with_capacity(k_max);
        for k in 0..k_max {
            let at = wrap(Some(eps), Some(k + 1));
            let field = pencil.field(&sol, k).map_err(&at)?;
            let m = averaged_trace(&samples, &field, &p, &profile).map_err(&at)?;
            let group = group_of(k);
            let err = if group.len() > 1 {
                let vs: Vec<Vec<f64>> = group.iter().map(|&j| limit_samples[j].clone()).collect();
                subspace_error(&samples, &m, &vs)
            } else {
                aligned(&samples, &m, &limit_samples[k]).error
            };
            trace_error.push(err);
        }
        Ok(EpsilonResult {
            lambda: sol.values,
            trace_error,
        })
    };

    let results: Vec<EpsilonResult> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        pool.install(|| epsilons.par_iter().map(|&e| solve_eps(e)).collect::<Result<Vec<_>>>())?
    } else {
        epsilons.iter().map(|&e| solve_eps(e)).collect::<Result<Vec<_>>>()?
    };

    for k in 0..k_max {
        let mut pairs = Vec::new();
        for (&eps, res) in epsilons.iter().zip(&results) {
            let ratio = res.lambda[k] / (eps * lambda_1d[k]);
            pairs.push((eps, (ratio - 1.0).abs()));
            report.rows.push(ReportRow {
                epsilon: Some(eps),
                k: k + 1,
                lambda_2d: Some(res.lambda[k]),
                lambda_1d: lambda_1d[k],
                ratio: Some(ratio),
                trace_error: Some(res.trace_error[k]),
                nx: Some(config.nx),
                ny: Some(config.ny),
                n1d: config.n1d,
            });
        }
        report.rates.push(RateFit {
            k: k + 1,
            slope: estimate_rate(&pairs).ok(),
        });
    }
    Ok(report)
}
