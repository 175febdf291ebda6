//! Experiment configuration: a versioned JSON document describing the
//! input network, the reduction/sampling method, the levels to evaluate
//! and every stochastic parameter. Identical configs (including the
//! master seed) reproduce byte-identical CSV outputs.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use netshrink_core::error::{Error, Result};
use netshrink_core::generate::{self, GeneratorSpec};
use netshrink_core::graph::Graph;
use netshrink_core::io::read_edge_list_file;

pub const SCHEMA_VERSION: u32 = 1;

/// Where the level-0 network comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NetworkSource {
    Generator {
        model: GeneratorKind,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        avg_degree: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<usize>,
        seed: u64,
    },
    EdgeList {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Er,
    Ba,
}

/// Reduction or sampling method applied per level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Nrdc,
    NrdcPrime,
    Rdn,
    Mhrw,
    Cnarw,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Nrdc => "nrdc",
            Method::NrdcPrime => "nrdc-prime",
            Method::Rdn => "rdn",
            Method::Mhrw => "mhrw",
            Method::Cnarw => "cnarw",
        }
    }
}

/// Uniform grid description.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn linear(&self) -> Vec<f64> {
        netshrink_core::metrics::linspace(self.min, self.max, self.steps)
    }

    pub fn logarithmic(&self) -> Vec<f64> {
        netshrink_core::metrics::logspace(self.min, self.max, self.steps)
    }
}

fn default_gamma() -> f64 {
    1.0
}
fn default_init_frac() -> f64 {
    0.1
}
fn default_runs() -> usize {
    100
}
fn default_grid_points() -> usize {
    101
}

/// SIR ensemble parameters (seeds are derived from the master seed).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SirConfig {
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    #[serde(default = "default_init_frac")]
    pub init_top_degree_frac: f64,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default = "default_grid_points")]
    pub grid_points: usize,
}

impl Default for SirConfig {
    fn default() -> Self {
        SirConfig {
            gamma: default_gamma(),
            init_top_degree_frac: default_init_frac(),
            runs: default_runs(),
            grid_points: default_grid_points(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SpectralEstimator {
    #[default]
    Dense,
    Stochastic,
}

fn default_curve_betas() -> Vec<f64> {
    vec![1.0]
}
fn default_beta_grid() -> GridSpec {
    GridSpec {
        min: 0.0,
        max: 2.0,
        steps: 21,
    }
}
fn default_tau_grid() -> GridSpec {
    GridSpec {
        min: 1e-2,
        max: 1e3,
        steps: 60,
    }
}
fn default_k_min() -> usize {
    2
}
fn default_degree_tolerance() -> f64 {
    0.1
}
fn default_true() -> bool {
    true
}

/// Top-level experiment description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub network: NetworkSource,
    pub method: Method,
    /// Reduction levels `l`; reduction methods use `q = 1 - 1/2^l`,
    /// samplers use `sr = 1/2^l`. Level 0 is the original network.
    pub levels: Vec<u32>,
    #[serde(default = "default_k_min")]
    pub k_min: usize,
    #[serde(default = "default_degree_tolerance")]
    pub degree_tolerance: f64,
    #[serde(default = "default_true")]
    pub lcc_fallback: bool,
    #[serde(default)]
    pub sir: SirConfig,
    /// Infection rates at which full i(t)/r(t) curves are recorded.
    #[serde(default = "default_curve_betas")]
    pub curve_betas: Vec<f64>,
    #[serde(default = "default_beta_grid")]
    pub beta_grid: GridSpec,
    #[serde(default = "default_tau_grid")]
    pub tau_grid: GridSpec,
    #[serde(default)]
    pub spectral_estimator: SpectralEstimator,
    /// Skip the spectral stage entirely (it dominates runtime on large
    /// graphs).
    #[serde(default)]
    pub skip_spectral: bool,
    pub output_dir: PathBuf,
    pub master_seed: u64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.levels.is_empty() {
            return Err(Error::Config("levels must be non-empty".into()));
        }
        if self.curve_betas.is_empty() {
            return Err(Error::Config("curve_betas must be non-empty".into()));
        }
        if self.curve_betas.iter().any(|&b| b < 0.0) {
            return Err(Error::Config("curve_betas must be non-negative".into()));
        }
        if self.beta_grid.steps < 2 || self.beta_grid.min < 0.0 || self.beta_grid.max <= self.beta_grid.min {
            return Err(Error::Config("beta grid must span a positive range with >= 2 steps".into()));
        }
        if self.tau_grid.steps < 2 || self.tau_grid.min <= 0.0 || self.tau_grid.max <= self.tau_grid.min {
            return Err(Error::Config("tau grid must be positive and increasing with >= 2 steps".into()));
        }
        if self.sir.runs < 1 {
            return Err(Error::Config("sir.runs must be at least 1".into()));
        }
        if self.sir.grid_points < 2 {
            return Err(Error::Config("sir.grid_points must be at least 2".into()));
        }
        if !(self.sir.init_top_degree_frac > 0.0 && self.sir.init_top_degree_frac < 1.0) {
            return Err(Error::Config("sir.init_top_degree_frac must lie in (0, 1)".into()));
        }
        if !(self.sir.gamma > 0.0) {
            return Err(Error::Config("sir.gamma must be positive".into()));
        }
        if self.k_min < 1 {
            return Err(Error::Config("k_min must be at least 1".into()));
        }
        if !(self.degree_tolerance > 0.0) {
            return Err(Error::Config("degree_tolerance must be positive".into()));
        }
        if let NetworkSource::Generator { model, n, avg_degree, m, .. } = &self.network {
            match model {
                GeneratorKind::Er if avg_degree.is_none() => {
                    return Err(Error::Config("ER generator needs avg_degree".into()))
                }
                GeneratorKind::Ba if m.is_none() => {
                    return Err(Error::Config("BA generator needs m".into()))
                }
                _ => {}
            }
            if *n < 2 {
                return Err(Error::Config("generator needs n >= 2".into()));
            }
        }
        Ok(())
    }

    /// Loads and validates a config file.
    pub fn load<P: AsRef<Path>>(path: P) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let config: ExperimentConfig =
            serde_json::from_str(&text).map_err(|e| Error::Config(format!("config JSON: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    /// Short name used in reports: the dataset file stem or the
    /// generator model plus size.
    pub fn network_name(&self) -> String {
        match &self.network {
            NetworkSource::Generator { model, n, .. } => match model {
                GeneratorKind::Er => format!("er-n{n}"),
                GeneratorKind::Ba => format!("ba-n{n}"),
            },
            NetworkSource::EdgeList { path } => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "network".into()),
        }
    }

    /// Materializes the level-0 network.
    pub fn load_network(&self) -> Result<Graph> {
        match &self.network {
            NetworkSource::Generator { model, n, avg_degree, m, seed } => {
                let spec = match model {
                    GeneratorKind::Er => GeneratorSpec::erdos_renyi(
                        *n,
                        avg_degree.ok_or_else(|| Error::Config("ER generator needs avg_degree".into()))?,
                        *seed,
                    ),
                    GeneratorKind::Ba => GeneratorSpec::barabasi_albert(
                        *n,
                        m.ok_or_else(|| Error::Config("BA generator needs m".into()))?,
                        *seed,
                    ),
                };
                generate::generate(&spec)
            }
            NetworkSource::EdgeList { path } => read_edge_list_file(path),
        }
    }
}
