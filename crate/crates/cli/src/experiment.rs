//! Experiment orchestration: reduce (or sample) at each level, measure
//! topology, epidemic curves, spreading profiles and spectral summaries,
//! then compare every level against level 0. All outputs are CSV/JSON
//! files under the config's output directory; re-running an identical
//! config rewrites byte-identical CSVs.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use netshrink_core::error::{Error, Result};
use netshrink_core::graph::Graph;
use netshrink_core::io::write_edge_list_file;
use netshrink_core::metrics::f_overlap;
use netshrink_core::reduce::{nrdc, nrdc_prime, ReductionParams};
use netshrink_core::rng::mix64;
use netshrink_core::sample::{sample, SamplerMethod, SamplerSpec};
use netshrink_core::sir::{adaptive_time_grid, curve_mae, ensemble_curve, spreading_profile, SirParams};
use netshrink_core::spectral::{spectral_summary, stochastic_spectral_summary, StochasticTraceParams};
use netshrink_core::{SirCurve, SpreadingProfile};

use crate::config::{ExperimentConfig, Method, SpectralEstimator};
use crate::formats;

/// Stable stage seed: `hash(master_seed, stage_name, level, extra)`.
pub fn stage_seed(master_seed: u64, stage: &str, level: u32, extra: u64) -> u64 {
    // FNV-1a over the stage name, then SplitMix64 finalization over all
    // coordinates. No std hasher: stability across toolchains matters.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stage.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    mix64(master_seed ^ mix64(h ^ mix64(level as u64 ^ mix64(extra))))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StageError {
    pub level: u32,
    pub stage: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LevelReport {
    pub level: u32,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub f_overlap: Option<f64>,
    pub s_delta: Option<f64>,
    /// MAE of the r/i curves against level 0, one entry per curve beta.
    pub mae: Vec<MaeEntry>,
    pub wall_clock_ms: BTreeMap<String, u64>,
    pub seeds: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MaeEntry {
    pub beta: f64,
    pub mae_i: f64,
    pub mae_r: f64,
}

/// Index of everything one experiment produced.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExperimentResult {
    pub network: String,
    pub method: String,
    pub master_seed: u64,
    pub levels: Vec<LevelReport>,
    pub files: Vec<String>,
    pub stage_errors: Vec<StageError>,
}

impl ExperimentResult {
    pub fn overlap_for_level(&self, level: u32) -> Option<f64> {
        self.levels
            .iter()
            .find(|l| l.level == level)
            .and_then(|l| l.f_overlap)
    }
}

struct LevelArtifacts {

    curves: Vec<(f64, SirCurve)>,
    profile: Option<SpreadingProfile>,
}

/// Reduces (or samples) `g0` to level `level` under the configured method.
fn reduce_to_level(g0: &Graph, config: &ExperimentConfig, level: u32) -> Result<Graph> {
    if level == 0 {
        return Ok(g0.clone());
    }
    match config.method {
        Method::Nrdc | Method::NrdcPrime => {
            let params = ReductionParams {
                q: 1.0 - 0.5f64.powi(level as i32),
                k_min: config.k_min,
                degree_tolerance: config.degree_tolerance,
                lcc_fallback: config.lcc_fallback,
            };
            let (sub, _) = match config.method {
                Method::Nrdc => nrdc(g0, &params)?,
                _ => nrdc_prime(g0, &params)?,
            };
            Ok(sub)
        }
        Method::Rdn | Method::Mhrw | Method::Cnarw => {
            let method = match config.method {
                Method::Rdn => SamplerMethod::Rdn,
                Method::Mhrw => SamplerMethod::Mhrw,
                _ => SamplerMethod::Cnarw,
            };
            let spec = SamplerSpec::new(
                method,
                0.5f64.powi(level as i32),
                stage_seed(config.master_seed, "sample", level, 0),
            );
            sample(g0, &spec)
        }
    }
}

/// Runs the full experiment described by `config`, writing artifacts under
/// `config.output_dir` and returning the result index (also stored as
/// `result.json`). Stage failures are recorded per level without aborting
/// the remaining stages.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let out_dir = &config.output_dir;
    std::fs::create_dir_all(out_dir)?;
    let g0 = config.load_network()?;
    if g0.n() < 2 {
        return Err(Error::Domain("experiment needs a network with at least two nodes".into()));
    }

    let mut result = ExperimentResult {
        network: config.network_name(),
        method: config.method.name().to_string(),
        master_seed: config.master_seed,
        levels: Vec::new(),
        files: Vec::new(),
        stage_errors: Vec::new(),
    };
    let record = |path: PathBuf, files: &mut Vec<String>| {
        files.push(
            path.strip_prefix(out_dir)
                .unwrap_or(&path)
                .to_string_lossy()
                .into_owned(),
        );
    };

    // Echo the resolved config for provenance.
    let config_path = out_dir.join("config.json");
    formats::write_string(
        &config_path,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(config).map_err(|e| Error::Config(e.to_string()))?
        ),
    )?;
    record(config_path, &mut result.files);

    let beta_grid = config.beta_grid.linear();
    let tau_grid = config.tau_grid.logarithmic();
    let mut summary_rows = Vec::new();
    let mut artifacts: BTreeMap<u32, LevelArtifacts> = BTreeMap::new();

    for &level in &config.levels {
        let mut report = LevelReport {
            level,
            n: None,
            m: None,
            f_overlap: None,
            s_delta: None,
            mae: Vec::new(),
            wall_clock_ms: BTreeMap::new(),
            seeds: BTreeMap::new(),
        };
        let fail = |stage: &str, err: Error, errors: &mut Vec<StageError>| {
            errors.push(StageError {
                level,
                stage: stage.into(),
                message: err.to_string(),
            });
        };
        let level_dir = out_dir.join(format!("level_{level}"));

        // Stage: reduce/sample.
        let started = Instant::now();
        let graph = match reduce_to_level(&g0, config, level) {
            Ok(g) => g,
            Err(err) => {
                fail("reduce", err, &mut result.stage_errors);
                result.levels.push(report);
                continue;
            }
        };
        report
            .wall_clock_ms
            .insert("reduce".into(), started.elapsed().as_millis() as u64);
        report.n = Some(graph.n());
        report.m = Some(graph.m());
        let graph_path = level_dir.join("graph.txt");
        if let Some(parent) = graph_path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        write_edge_list_file(&graph, &graph_path)?;
        record(graph_path, &mut result.files);

        // Stage: topology summary.
        match graph.summarize() {
            Ok(summary) => summary_rows.push((level, summary)),
            Err(err) => fail("summary", err, &mut result.stage_errors),
        }

        // Stage: SIR curves at each configured beta.
        let mut curves = Vec::new();
        for (bi, &beta) in config.curve_betas.iter().enumerate() {
            let seed = stage_seed(config.master_seed, "sir-curve", level, bi as u64);
            report.seeds.insert(format!("sir-curve:{beta}"), seed);
            let params = SirParams {
                beta,
                gamma: config.sir.gamma,
                init_top_degree_frac: config.sir.init_top_degree_frac,
                runs: config.sir.runs,
                seed,
                time_grid: Vec::new(),
            };
            let started = Instant::now();
            let grid = match adaptive_time_grid(&graph, &params, config.sir.grid_points) {
                Ok(grid) => grid,
                Err(err) => {
                    fail("sir-curve", err, &mut result.stage_errors);
                    continue;
                }
            };
            let params = SirParams { time_grid: grid, ..params };
            match ensemble_curve(&graph, &params) {
                Ok(curve) => {
                    report
                        .wall_clock_ms
                        .insert(format!("sir-curve:{beta}"), started.elapsed().as_millis() as u64);
                    let path = level_dir.join(format!("curve_beta_{beta}.csv"));
                    formats::write_string(&path, &formats::curve_to_csv(&curve))?;
                    record(path, &mut result.files);
                    curves.push((beta, curve));
                }
                Err(err) => fail("sir-curve", err, &mut result.stage_errors),
            }
        }

        // Stage: spreading profile over the beta grid.
        let seed = stage_seed(config.master_seed, "profile", level, 0);
        report.seeds.insert("profile".into(), seed);
        let params = SirParams {
            beta: 0.0,
            gamma: config.sir.gamma,
            init_top_degree_frac: config.sir.init_top_degree_frac,
            runs: config.sir.runs,
            seed,
            time_grid: Vec::new(),
        };
        let started = Instant::now();
        let profile = match spreading_profile(&graph, &beta_grid, &params) {
            Ok(profile) => {
                report
                    .wall_clock_ms
                    .insert("profile".into(), started.elapsed().as_millis() as u64);
                let path = level_dir.join("profile.csv");
                formats::write_string(&path, &formats::profile_to_csv(&profile))?;
                record(path, &mut result.files);
                Some(profile)
            }
            Err(err) => {
                fail("profile", err, &mut result.stage_errors);
                None
            }
        };

        // Stage: spectral summary.
        if !config.skip_spectral {
            let started = Instant::now();
            let spectral = match config.spectral_estimator {
                SpectralEstimator::Dense => spectral_summary(&graph, &tau_grid),
                SpectralEstimator::Stochastic => {
                    let seed = stage_seed(config.master_seed, "spectral", level, 0);
                    report.seeds.insert("spectral".into(), seed);
                    stochastic_spectral_summary(
                        &graph,
                        &tau_grid,
                        &StochasticTraceParams { seed, ..StochasticTraceParams::default() },
                    )
                }
            };
            match spectral {
                Ok(summary) => {
                    report
                        .wall_clock_ms
                        .insert("spectral".into(), started.elapsed().as_millis() as u64);
                    let path = level_dir.join("spectral.csv");
                    formats::write_string(&path, &formats::spectral_to_csv(&summary))?;
                    record(path, &mut result.files);
                }
                Err(err) => fail("spectral", err, &mut result.stage_errors),
            }
        }

        artifacts.insert(level, LevelArtifacts { curves, profile });
        result.levels.push(report);
    }

    // Summary table across levels.
    let summary_path = out_dir.join("summary.csv");
    formats::write_string(&summary_path, &formats::summary_rows_to_csv(&summary_rows))?;
    record(summary_path, &mut result.files);

    // Cross-level comparisons against level 0.
    let mut overlap_csv = String::from(formats::OVERLAP_HEADER);
    overlap_csv.push('\n');
    let mut mae_csv = String::from(formats::MAE_HEADER);
    mae_csv.push('\n');
    if let Some(base) = artifacts.get(&0) {
        let base_profile = base.profile.clone();
        let base_curves = base.curves.clone();
        for report in &mut result.levels {
            let Some(level_art) = artifacts.get(&report.level) else {
                continue;
            };
            if let (Some(p0), Some(pl)) = (&base_profile, &level_art.profile) {
                match f_overlap(&p0.beta_grid, &p0.rho_r, &pl.rho_r) {
                    Ok(overlap) => {
                        report.f_overlap = Some(overlap.f_overlap);
                        report.s_delta = Some(overlap.s_delta);
                        overlap_csv.push_str(&format!(
                            "{},{},{}\n",
                            report.level, overlap.f_overlap, overlap.s_delta
                        ));
                    }
                    Err(err) => result.stage_errors.push(StageError {
                        level: report.level,
                        stage: "overlap".into(),
                        message: err.to_string(),
                    }),
                }
            }
            for (beta, base_curve) in &base_curves {
                let Some((_, level_curve)) = level_art
                    .curves
                    .iter()
                    .find(|(b, _)| b == beta)
                else {
                    continue;
                };
                let comparison = level_curve
                    .resample(&base_curve.time_grid)
                    .and_then(|resampled| curve_mae(base_curve, &resampled));
                match comparison {
                    Ok(mae) => {
                        report.mae.push(MaeEntry {
                            beta: *beta,
                            mae_i: mae.i,
                            mae_r: mae.r,
                        });
                        mae_csv.push_str(&format!(
                            "{},{},{},{}\n",
                            report.level, beta, mae.i, mae.r
                        ));
                    }
                    Err(err) => result.stage_errors.push(StageError {
                        level: report.level,
                        stage: "mae".into(),
                        message: err.to_string(),
                    }),
                }
            }
        }
    }
    let overlap_path = out_dir.join("overlap.csv");
    formats::write_string(&overlap_path, &overlap_csv)?;
    record(overlap_path, &mut result.files);
    let mae_path = out_dir.join("mae.csv");
    formats::write_string(&mae_path, &mae_csv)?;
    record(mae_path, &mut result.files);

    let result_path = out_dir.join("result.json");
    formats::write_string(
        &result_path,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&result).map_err(|e| Error::Config(e.to_string()))?
        ),
    )?;
    Ok(result)
}
