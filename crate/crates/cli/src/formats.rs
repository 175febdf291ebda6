//! CSV formats for every artifact the harness emits, with matching
//! parsers so outputs can be round-tripped and re-used as inputs.
//!
//! Floats are written with Rust's shortest round-trip formatting, which
//! is deterministic and parses back to the identical bit pattern.

use std::path::Path;

use netshrink_core::error::{Error, Result};
use netshrink_core::graph::NetworkSummary;
use netshrink_core::{SirCurve, SpectralSummary, SpreadingProfile};

pub fn write_string(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, contents)?;
    Ok(())
}

fn parse_f64(token: &str, line: usize) -> Result<f64> {
    token.trim().parse::<f64>().map_err(|_| Error::Parse {
        line,
        msg: format!("`{token}` is not a number"),
    })
}

fn split_csv(text: &str, header: &str) -> Result<Vec<Vec<f64>>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim() == header => {}
        other => {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected header `{header}`, found {:?}", other.map(|(_, l)| l)),
            })
        }
    }
    let columns = header.split(',').count();
    let mut rows = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected {columns} columns, found {}", fields.len()),
            });
        }
        rows.push(
            fields
                .iter()
                .map(|f| parse_f64(f, idx + 1))
                .collect::<Result<Vec<f64>>>()?,
        );
    }
    Ok(rows)
}

pub const CURVE_HEADER: &str = "t,s,i,r";

pub fn curve_to_csv(curve: &SirCurve) -> String {
    let mut out = String::from(CURVE_HEADER);
    out.push('\n');
    for k in 0..curve.time_grid.len() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            curve.time_grid[k], curve.s_mean[k], curve.i_mean[k], curve.r_mean[k]
        ));
    }
    out
}

pub fn curve_from_csv(text: &str) -> Result<SirCurve> {
    let rows = split_csv(text, CURVE_HEADER)?;
    if rows.len() < 2 {
        return Err(Error::Parse {
            line: 1,
            msg: "curve needs at least two rows".into(),
        });
    }
    Ok(SirCurve {
        time_grid: rows.iter().map(|r| r[0]).collect(),
        s_mean: rows.iter().map(|r| r[1]).collect(),
        i_mean: rows.iter().map(|r| r[2]).collect(),
        r_mean: rows.iter().map(|r| r[3]).collect(),
    })
}

pub const PROFILE_HEADER: &str = "beta,rho_r";

pub fn profile_to_csv(profile: &SpreadingProfile) -> String {
    let mut out = String::from(PROFILE_HEADER);
    out.push('\n');
    for (b, r) in profile.beta_grid.iter().zip(&profile.rho_r) {
        out.push_str(&format!("{b},{r}\n"));
    }
    out
}

pub fn profile_from_csv(text: &str) -> Result<SpreadingProfile> {
    let rows = split_csv(text, PROFILE_HEADER)?;
    if rows.len() < 2 {
        return Err(Error::Parse {
            line: 1,
            msg: "profile needs at least two rows".into(),
        });
    }
    Ok(SpreadingProfile {
        beta_grid: rows.iter().map(|r| r[0]).collect(),
        rho_r: rows.iter().map(|r| r[1]).collect(),
    })
}

pub const SPECTRAL_HEADER: &str = "tau,z,z_norm,entropy,free_energy";

pub fn spectral_to_csv(summary: &SpectralSummary) -> String {
    let mut out = String::from(SPECTRAL_HEADER);
    out.push('\n');
    for k in 0..summary.tau_grid.len() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            summary.tau_grid[k],
            summary.z[k],
            summary.z_norm[k],
            summary.entropy[k],
            summary.free_energy[k]
        ));
    }
    out
}

pub fn spectral_from_csv(text: &str) -> Result<SpectralSummary> {
    let rows = split_csv(text, SPECTRAL_HEADER)?;
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "spectral summary is empty".into(),
        });
    }
    Ok(SpectralSummary {
        tau_grid: rows.iter().map(|r| r[0]).collect(),
        z: rows.iter().map(|r| r[1]).collect(),
        z_norm: rows.iter().map(|r| r[2]).collect(),
        entropy: rows.iter().map(|r| r[3]).collect(),
        free_energy: rows.iter().map(|r| r[4]).collect(),
    })
}

pub const SUMMARY_HEADER: &str = "level,n,m,avg_degree,heterogeneity,s_lcc";

pub fn summary_rows_to_csv(rows: &[(u32, NetworkSummary)]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for (level, s) in rows {
        out.push_str(&format!(
            "{level},{},{},{},{},{}\n",
            s.n, s.m, s.avg_degree, s.heterogeneity, s.s_lcc
        ));
    }
    out
}

pub fn summary_rows_from_csv(text: &str) -> Result<Vec<(u32, NetworkSummary)>> {
    let rows = split_csv(text, SUMMARY_HEADER)?;
    Ok(rows
        .iter()
        .map(|r| {
            (
                r[0] as u32,
                NetworkSummary {
                    n: r[1] as usize,
                    m: r[2] as usize,
                    avg_degree: r[3],
                    heterogeneity: r[4],
                    s_lcc: r[5],
                },
            )
        })
        .collect())
}

pub const OVERLAP_HEADER: &str = "level,f_overlap,s_delta";
pub const MAE_HEADER: &str = "level,beta,mae_i,mae_r";

#[cfg(test)]
mod tests {
    use super::*;
    use netshrink_core::metrics::linspace;

    #[test]
    fn curve_round_trip_is_bit_exact() {
        let curve = SirCurve {
            time_grid: linspace(0.0, 3.7, 11),
            s_mean: linspace(1.0, 0.21, 11),
            i_mean: linspace(0.0, 0.13, 11),
            r_mean: linspace(0.0, 0.66, 11),
        };
        let text = curve_to_csv(&curve);
        let back = curve_from_csv(&text).unwrap();
        assert_eq!(curve, back);
        assert_eq!(text, curve_to_csv(&back));
    }

    #[test]
    fn profile_round_trip() {
        let profile = SpreadingProfile {
            beta_grid: linspace(0.0, 2.0, 21),
            rho_r: linspace(0.1, 0.93, 21),
        };
        let back = profile_from_csv(&profile_to_csv(&profile)).unwrap();
        assert_eq!(profile, back);
    }

    #[test]
    fn spectral_round_trip() {
        let summary = SpectralSummary {
            tau_grid: vec![0.01, 0.1, 1.0],
            z: vec![9.9, 7.5, 3.2],
            z_norm: vec![0.99, 0.75, 0.32],
            entropy: vec![2.3, 2.0, 1.1],
            free_energy: vec![-229.2, -20.1, -1.16],
        };
        let back = spectral_from_csv(&spectral_to_csv(&summary)).unwrap();
        assert_eq!(summary, back);
    }

    #[test]
    fn bad_header_is_a_parse_error() {
        assert!(curve_from_csv("x,y\n1,2\n").is_err());
        assert!(profile_from_csv("beta,rho\n0,0.1\n").is_err());
    }

    #[test]
    fn column_count_mismatch_names_line() {
        let text = "t,s,i,r\n0,1,0\n";
        match curve_from_csv(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
