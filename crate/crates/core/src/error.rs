use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("sigma = {sigma} outside the admissible interval (-1/(n-1), 1) for n = {n}")]
    SigmaOutOfRange { n: usize, sigma: f64 },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("dimension {0} is not supported (need at least {1})")]
    BadDimension(usize, usize),

    #[error("x1 = {x} lies outside [-{l}, {l}]")]
    OutOfDomain { x: f64, l: f64 },

    #[error("profile is not positive at x1 = {x} (rho = {value})")]
    NonPositiveProfile { x: f64, value: f64 },

    #[error("{what} = {got} is too small (minimum {min})")]
    BadCount {
        what: &'static str,
        got: usize,
        min: usize,
    },

    #[error("matrix is not symmetric (relative asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not positive definite (pivot {pivot} = {value:e})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("requested {requested} eigenvalues but the pencil has only {available} finite ones")]
    TooFewFinite { requested: usize, available: usize },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("vector has zero trace (right-hand form vanishes)")]
    ZeroTrace,

    #[error("degenerate fit: {0}")]
    DegenerateFit(&'static str),

    #[error("deviation #{index} = {value} is not positive")]
    NonPositiveDeviation { index: usize, value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("study failed at eps = {epsilon:?}, k = {k:?}: {source}")]
    Study {
        epsilon: Option<f64>,
        k: Option<usize>,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
