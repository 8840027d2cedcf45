//! Study configuration and its flat `key = value` file format.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{validate_params, ProblemParams};
use crate::profile::{Profile, ProfileKind};

/// Which legs of the study run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyMode {
    /// 2D solve for every epsilon plus the limit problem.
    Full,
    /// Limit problem only; any `n >= 2`.
    LimitOnly,
    /// One 2D solve at the first epsilon.
    Single,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    pub n: usize,
    pub sigma: f64,
    pub mu: f64,
    pub l: f64,
    pub profile: ProfileKind,
    /// Strictly decreasing.
    pub epsilons: Vec<f64>,
    pub k_max: usize,
    pub nx: usize,
    pub ny: usize,
    pub n1d: usize,
    pub quad: usize,
    pub mode: StudyMode,
}

impl Default for StudyConfig {
    fn default() -> Self {
        Self {
            n: 2,
            sigma: 0.3,
            mu: 1.0,
            l: 1.0,
            profile: ProfileKind::Constant { c: 1.0 },
            epsilons: vec![0.2, 0.1, 0.05],
            k_max: 3,
            nx: 64,
            ny: 4,
            n1d: 128,
            quad: 4,
            mode: StudyMode::Full,
        }
    }
}

const KEYS: &[&str] = &[
    "n",
    "sigma",
    "mu",
    "l",
    "profile.kind",
    "profile.a",
    "profile.b",
    "profile.coeffs",
    "epsilons",
    "k_max",
    "nx",
    "ny",
    "n1d",
    "quad",
];

impl StudyConfig {
    pub fn params(&self) -> ProblemParams {
        ProblemParams::new(self.n, self.sigma, self.mu, self.l)
    }

    pub fn build_profile(&self) -> Result<Profile> {
        Profile::new(self.profile.clone(), self.l)
    }

    pub fn runs_2d(&self) -> bool {
        self.mode != StudyMode::LimitOnly
    }

    pub fn validate(&self) -> Result<()> {
        validate_params(self.params())?;
        self.build_profile()?;
        if self.k_max < 1 {
            return Err(Error::Config("k_max must be at least 1".into()));
        }
        if self.quad < 1 {
            return Err(Error::Config("quad must be at least 1".into()));
        }
        if self.runs_2d() {
            if self.n != 2 {
                return Err(Error::Config(format!(
                    "the 2D leg needs n = 2, got n = {}",
                    self.n
                )));
            }
            if self.epsilons.is_empty() {
                return Err(Error::Config("epsilon list is empty".into()));
            }
        }
        if let Some(e) = self.epsilons.iter().find(|&&e| !(e > 0.0) || !e.is_finite()) {
            return Err(Error::Config(format!("epsilon {e} is not positive")));
        }
        if self.epsilons.windows(2).any(|w| !(w[0] > w[1])) {
            return Err(Error::Config(
                "epsilon list must be strictly decreasing".into(),
            ));
        }
        Ok(())
    }

    /// Parses the flat text format. Unknown keys are rejected.
    ///
    /// ```text
    /// # comment
    /// n = 2
    /// sigma = 0.3
    /// profile.kind = cosine_bump
    /// profile.a = 1
    /// profile.b = 0.3
    /// epsilons = 0.2, 0.1, 0.05
    /// ```
    pub fn parse(text: &str, mode: StudyMode) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(Error::Config(format!("line {}: unknown key `{key}`", lineno + 1)));
            }
            if map.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(Error::Config(format!("line {}: duplicate key `{key}`", lineno + 1)));
            }
        }

        let mut cfg = StudyConfig {
            mode,
            ..Default::default()
        };
        if let Some(v) = map.get("n") {
            cfg.n = parse_num(v, "n")?;
        }
        if let Some(v) = map.get("sigma") {
            cfg.sigma = parse_num(v, "sigma")?;
        }
        if let Some(v) = map.get("mu") {
            cfg.mu = parse_num(v, "mu")?;
        }
        if let Some(v) = map.get("l") {
            cfg.l = parse_num(v, "l")?;
        }
        if let Some(v) = map.get("k_max") {
            cfg.k_max = parse_num(v, "k_max")?;
        }
        if let Some(v) = map.get("nx") {
            cfg.nx = parse_num(v, "nx")?;
        }
        if let Some(v) = map.get("ny") {
            cfg.ny = parse_num(v, "ny")?;
        }
        if let Some(v) = map.get("n1d") {
            cfg.n1d = parse_num(v, "n1d")?;
        }
        if let Some(v) = map.get("quad") {
            cfg.quad = parse_num(v, "quad")?;
        }
        if let Some(v) = map.get("epsilons") {
            cfg.epsilons = parse_list(v, "epsilons")?;
        }

        let a = map.get("profile.a").map(|v| parse_num::<f64>(v, "profile.a")).transpose()?;
        let b = map.get("profile.b").map(|v| parse_num::<f64>(v, "profile.b")).transpose()?;
        let coeffs = map
            .get("profile.coeffs")
            .map(|v| parse_list(v, "profile.coeffs"))
            .transpose()?;
        let kind = map.get("profile.kind").map(String::as_str).unwrap_or("constant");
        cfg.profile = match kind {
            "constant" => ProfileKind::Constant { c: a.unwrap_or(1.0) },
            "polynomial" => ProfileKind::Polynomial {
                coeffs: coeffs.ok_or_else(|| {
                    Error::Config("polynomial profile needs profile.coeffs".into())
                })?,
            },
            "cosine_bump" => ProfileKind::CosineBump {
                a: a.ok_or_else(|| Error::Config("cosine_bump needs profile.a".into()))?,
                b: b.ok_or_else(|| Error::Config("cosine_bump needs profile.b".into()))?,
            },
            other => return Err(Error::Config(format!("unknown profile kind `{other}`"))),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path, mode: StudyMode) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?, mode)
    }
}

fn parse_num<T: std::str::FromStr>(v: &str, key: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Config(format!("cannot parse `{v}` for {key}")))
}

fn parse_list(v: &str, key: &str) -> Result<Vec<f64>> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_num(s, key))
        .collect()
}
