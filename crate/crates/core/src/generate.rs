//! Synthetic network generators with deterministic seeding.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded_rng;

/// Generator family plus its model parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorModel {
    /// Erdős–Rényi G(n, p) with p chosen to hit a target average degree.
    ErdosRenyi { target_avg_degree: f64 },
    /// Barabási–Albert preferential attachment adding `m` edges per node.
    BarabasiAlbert { m: usize },
}

/// Full specification of a synthetic network; identical specs generate
/// byte-identical graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub model: GeneratorModel,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn erdos_renyi(n: usize, target_avg_degree: f64, seed: u64) -> Self {
        GeneratorSpec {
            model: GeneratorModel::ErdosRenyi { target_avg_degree },
            n,
            seed,
        }
    }

    pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Self {
        GeneratorSpec {
            model: GeneratorModel::BarabasiAlbert { m },
            n,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Config(format!("generator needs n >= 2, got {}", self.n)));
        }
        match self.model {
            GeneratorModel::ErdosRenyi { target_avg_degree } => {
                let max = (self.n - 1) as f64;
                if !(0.0..=max).contains(&target_avg_degree) {
                    return Err(Error::Config(format!(
                        "ER target average degree {target_avg_degree} outside [0, {max}]"
                    )));
                }
            }
            GeneratorModel::BarabasiAlbert { m } => {
                if m < 1 || m >= self.n {
                    return Err(Error::Config(format!(
                        "BA attachment count {m} outside [1, {})",
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Generates the graph described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match spec.model {
        GeneratorModel::ErdosRenyi { .. } => erdos_renyi(spec),
        GeneratorModel::BarabasiAlbert { .. } => barabasi_albert(spec),
    }
}

/// Erdős–Rényi random graph: each of the C(n,2) pairs becomes an edge
/// independently with probability `target_avg_degree / (n - 1)`.
pub fn erdos_renyi(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let GeneratorModel::ErdosRenyi { target_avg_degree } = spec.model else {
        return Err(Error::Config("spec does not describe an ER model".into()));
    };
    let n = spec.n;
    let p = target_avg_degree / (n - 1) as f64;
    let mut rng = seeded_rng(spec.seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_index_edges(n, edges))
}

/// Barabási–Albert scale-free graph. Starts from a complete graph on `m`
/// nodes; each subsequent node attaches `m` edges to distinct targets
/// drawn with probability proportional to current degree (duplicate
/// draws rejected). The result is connected with exactly
/// `C(m,2) + m(n-m)` edges.
pub fn barabasi_albert(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let GeneratorModel::BarabasiAlbert { m } = spec.model else {
        return Err(Error::Config("spec does not describe a BA model".into()));
    };
    let n = spec.n;
    let mut rng = seeded_rng(spec.seed);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m * (m - 1) / 2 + m * (n - m));
    // One entry per unit of degree; uniform draws from it are
    // degree-proportional draws.
    let mut degree_pool: Vec<u32> = Vec::with_capacity(2 * (m * (m - 1) / 2 + m * (n - m)));
    for i in 0..m as u32 {
        for j in (i + 1)..m as u32 {
            edges.push((i, j));
            degree_pool.push(i);
            degree_pool.push(j);
        }
    }
    let mut targets: Vec<u32> = Vec::with_capacity(m);
    for v in m as u32..n as u32 {
        targets.clear();
        while targets.len() < m {
            let candidate = if degree_pool.is_empty() {
                // Only reachable for m = 1: the seed "clique" is a single
                // isolated node, so the first attachment goes to node 0.
                0
            } else {
                degree_pool[rng.random_range(0..degree_pool.len())]
            };
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            degree_pool.push(t);
            degree_pool.push(v);
        }
    }
    Ok(Graph::from_index_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_forced_edge_at_p_one() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(2, 1.0, 7)).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn er_zero_degree_gives_isolated_nodes() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(100, 0.0, 7)).unwrap();
        assert_eq!((g.n(), g.m()), (100, 0));
    }

    #[test]
    fn er_empirical_average_degree() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(5000, 10.0, 13)).unwrap();
        let k = g.average_degree().unwrap();
        assert!((k - 10.0).abs() <= 0.3, "avg degree {k}");
    }

    #[test]
    fn er_deterministic_under_seed() {
        let a = erdos_renyi(&GeneratorSpec::erdos_renyi(300, 6.0, 99)).unwrap();
        let b = erdos_renyi(&GeneratorSpec::erdos_renyi(300, 6.0, 99)).unwrap();
        let c = erdos_renyi(&GeneratorSpec::erdos_renyi(300, 6.0, 100)).unwrap();
        assert_eq!(a, b);
        assert!(a != c);
    }

    #[test]
    fn ba_seed_clique_only() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(6, 5, 3)).unwrap();
        assert_eq!((g.n(), g.m()), (6, 15)); // K6
    }

    #[test]
    fn ba_exact_edge_count_and_connected() {
        for (n, m, seed) in [(50, 3, 0), (200, 5, 1), (40, 1, 2)] {
            let g = barabasi_albert(&GeneratorSpec::barabasi_albert(n, m, seed)).unwrap();
            assert_eq!(g.m(), m * (m - 1) / 2 + m * (n - m));
            assert!(g.is_connected().unwrap());
            g.validate().unwrap();
        }
    }

    #[test]
    fn ba_average_degree_near_two_m() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(5000, 5, 21)).unwrap();
        let k = g.average_degree().unwrap();
        assert!((k - 10.0).abs() <= 0.2, "avg degree {k}");
        assert!(g.is_connected().unwrap());
    }

    #[test]
    fn ba_deterministic_under_seed() {
        let a = barabasi_albert(&GeneratorSpec::barabasi_albert(400, 4, 5)).unwrap();
        let b = barabasi_albert(&GeneratorSpec::barabasi_albert(400, 4, 5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ba_more_heterogeneous_than_er() {
        let mut ba_sum = 0.0;
        let mut er_sum = 0.0;
        for seed in 0..10 {
            let ba = barabasi_albert(&GeneratorSpec::barabasi_albert(1000, 5, seed)).unwrap();
            let er = erdos_renyi(&GeneratorSpec::erdos_renyi(1000, 10.0, seed)).unwrap();
            ba_sum += ba.heterogeneity_index().unwrap();
            er_sum += er.heterogeneity_index().unwrap();
        }
        assert!(
            ba_sum / 10.0 > er_sum / 10.0,
            "BA {} vs ER {}",
            ba_sum / 10.0,
            er_sum / 10.0
        );
    }

    #[test]
    fn invalid_specs_are_config_errors() {
        assert!(erdos_renyi(&GeneratorSpec::erdos_renyi(1, 0.5, 0)).is_err());
        assert!(erdos_renyi(&GeneratorSpec::erdos_renyi(10, 20.0, 0)).is_err());
        assert!(barabasi_albert(&GeneratorSpec::barabasi_albert(5, 5, 0)).is_err());
        assert!(barabasi_albert(&GeneratorSpec::barabasi_albert(5, 0, 0)).is_err());
        assert!(erdos_renyi(&GeneratorSpec::barabasi_albert(5, 2, 0)).is_err());
    }
}
