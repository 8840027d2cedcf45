//! Epsilon sweeps comparing the 2D Steklov spectrum with the limit problem,
//! plus the report formats consumed by external tools.

mod config;
mod rate;
mod report;
mod study;

pub use config::{StudyConfig, StudyMode};
pub use rate::estimate_rate;
pub use report::{
    write_report, ConvergenceReport, RateFit, ReportFormat, ReportMetadata, ReportRow, CSV_HEADER,
};
pub use study::{
    compare_eigenfunction_traces, run_convergence_study, run_convergence_study_with,
    TraceComparison, CLUSTER_GAP, TRACE_SAMPLES,
};
