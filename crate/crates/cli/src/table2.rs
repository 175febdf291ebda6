//! Overlap matrix across (network, method, level) combinations, built by
//! running one experiment per config. All configs must share the beta
//! grid and SIR parameters so the overlap scores are comparable.

use netshrink_core::error::{Error, Result};

use crate::config::ExperimentConfig;
use crate::experiment::run_experiment;

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapCell {
    pub network: String,
    pub method: String,
    pub level: u32,
    pub f_overlap: Option<f64>,
    pub seed: u64,
}

/// Runs every config and collects the per-level overlap scores.
pub fn table2_report(configs: &[ExperimentConfig]) -> Result<Vec<OverlapCell>> {
    if configs.is_empty() {
        return Err(Error::Usage("overlap report needs at least one config".into()));
    }
    let reference = &configs[0];
    for config in &configs[1..] {
        if config.beta_grid != reference.beta_grid || config.sir != reference.sir {
            return Err(Error::Usage(
                "overlap report configs must share the beta grid and SIR parameters".into(),
            ));
        }
    }
    let mut cells = Vec::new();
    for config in configs {
        let result = run_experiment(config)?;
        for level in &config.levels {
            cells.push(OverlapCell {
                network: result.network.clone(),
                method: result.method.clone(),
                level: *level,
                f_overlap: result.overlap_for_level(*level),
                seed: config.master_seed,
            });
        }
    }
    Ok(cells)
}

pub const TABLE_HEADER: &str = "network,method,level,f_overlap,seed";

pub fn table_to_csv(cells: &[OverlapCell]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for cell in cells {
        let value = cell
            .f_overlap
            .map(|f| f.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            cell.network, cell.method, cell.level, value, cell.seed
        ));
    }
    out
}
