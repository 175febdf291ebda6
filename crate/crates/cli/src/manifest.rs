//! Dataset manifest: summarize every edge-list file in a directory.

use std::path::Path;

use netshrink_core::error::Result;
use netshrink_core::graph::NetworkSummary;
use netshrink_core::io::read_edge_list_file;

/// One dataset row; unreadable files report an error instead of aborting
/// the scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestRow {
    pub name: String,
    pub summary: std::result::Result<NetworkSummary, String>,
}

/// Summarizes every regular file in `dir`, in file-name order.
pub fn dataset_manifest<P: AsRef<Path>>(dir: P) -> Result<Vec<ManifestRow>> {
    let mut names: Vec<(String, std::path::PathBuf)> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok())
        .filter(|entry| entry.path().is_file())
        .map(|entry| {
            let path = entry.path();
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| entry.file_name().to_string_lossy().into_owned());
            (name, path)
        })
        .collect();
    names.sort();
    Ok(names
        .into_iter()
        .map(|(name, path)| {
            let summary = read_edge_list_file(&path)
                .and_then(|g| g.summarize())
                .map_err(|e| e.to_string());
            ManifestRow { name, summary }
        })
        .collect())
}

pub const MANIFEST_HEADER: &str = "name,status,n,m,avg_degree,heterogeneity,s_lcc,error";

/// CSV rendering of a manifest.
pub fn manifest_to_csv(rows: &[ManifestRow]) -> String {
    let mut out = String::from(MANIFEST_HEADER);
    out.push('\n');
    for row in rows {
        match &row.summary {
            Ok(s) => out.push_str(&format!(
                "{},ok,{},{},{},{},{},\n",
                row.name, s.n, s.m, s.avg_degree, s.heterogeneity, s.s_lcc
            )),
            Err(e) => out.push_str(&format!(
                "{},error,,,,,,\"{}\"\n",
                row.name,
                e.replace('"', "'")
            )),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_scans_directory_and_reports_errors_per_file() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("good.txt"), "0 1\n1 2\n2 0\n").unwrap();
        std::fs::write(dir.path().join("bad.txt"), "0 x\n").unwrap();
        let rows = dataset_manifest(dir.path()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].name, "bad");
        assert!(rows[0].summary.is_err());
        assert_eq!(rows[1].name, "good");
        let s = rows[1].summary.as_ref().unwrap();
        assert_eq!((s.n, s.m), (3, 3));
        let csv = manifest_to_csv(&rows);
        assert!(csv.contains("bad,error"));
        assert!(csv.contains("good,ok,3,3,2,"));
    }

    #[test]
    fn empty_directory_gives_empty_manifest() {
        let dir = tempfile::tempdir().unwrap();
        assert!(dataset_manifest(dir.path()).unwrap().is_empty());
    }
}
