use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::config::StudyConfig;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "epsilon,k,lambda_2d,lambda_1d,ratio,trace_error,Nx,Ny,N1d";

/// One `(eps, k)` comparison. Limit-only rows leave the 2D fields empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub epsilon: Option<f64>,
    pub k: usize,
    pub lambda_2d: Option<f64>,
    pub lambda_1d: f64,
    /// `lambda_2d / (eps * lambda_1d)`.
    pub ratio: Option<f64>,
    pub trace_error: Option<f64>,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub n1d: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateFit {
    pub k: usize,
    /// Slope of `log|ratio - 1|` against `log eps`, when it can be fitted.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub config: StudyConfig,
    pub tool_version: String,
    /// Limit eigenvalues that sit in a cluster; their trace error is the
    /// distance to the cluster's eigenspace.
    pub clustered_k: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub rows: Vec<ReportRow>,
    pub rates: Vec<RateFit>,
    pub metadata: ReportMetadata,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

impl ConvergenceReport {
    pub fn empty(config: StudyConfig) -> Self {
        Self {
            rows: Vec::new(),
            rates: Vec::new(),
            metadata: ReportMetadata {
                config,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                clustered_k: Vec::new(),
            },
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        let float = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
        let int = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                float(r.epsilon),
                r.k,
                float(r.lambda_2d),
                float(Some(r.lambda_1d)),
                float(r.ratio),
                float(r.trace_error),
                int(r.nx),
                int(r.ny),
                r.n1d
            );
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Csv => Ok(self.to_csv()),
            ReportFormat::Json => self.to_json(),
        }
    }
}

pub fn write_report(report: &ConvergenceReport, format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, report.render(format)?)?;
    Ok(())
}
