//! Baseline subgraph samplers: uniform random node sampling and two
//! random-walk samplers (Metropolis–Hastings and common-neighbor-aware).
//! All samplers return the induced subgraph on the sampled node set.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded_rng;

/// Sampler family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplerMethod {
    /// Uniform node sample without replacement.
    Rdn,
    /// Metropolis–Hastings random walk with acceptance `min(1, d_u/d_v)`,
    /// whose stationary law is uniform over nodes.
    Mhrw,
    /// Random walk biased away from neighbors sharing many common
    /// neighbors, after the common-neighbor-aware walk family.
    Cnarw,
}

/// Sampler configuration; identical `(graph, spec)` pairs yield identical
/// subgraphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerSpec {
    pub method: SamplerMethod,
    /// Node sampling rate in `(0, 1]`; the output keeps `ceil(sr * N)` nodes.
    pub sr: f64,
    pub seed: u64,
    /// Walk steps before nodes start being collected (walk methods only).
    pub burn_in: usize,
}

impl SamplerSpec {
    pub fn new(method: SamplerMethod, sr: f64, seed: u64) -> Self {
        SamplerSpec {
            method,
            sr,
            seed,
            burn_in: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sr > 0.0 && self.sr <= 1.0) {
            return Err(Error::Config(format!("sampling rate {} outside (0, 1]", self.sr)));
        }
        Ok(())
    }
}

/// Dispatches on `spec.method`.
pub fn sample(g: &Graph, spec: &SamplerSpec) -> Result<Graph> {
    match spec.method {
        SamplerMethod::Rdn => random_node_sample(g, spec),
        SamplerMethod::Mhrw => mhrw_sample(g, spec),
        SamplerMethod::Cnarw => cnarw_sample(g, spec),
    }
}

fn target_count(n: usize, sr: f64) -> usize {
    (sr * n as f64).ceil() as usize
}

/// Uniform sample of `ceil(sr * N)` nodes without replacement; induced
/// subgraph on the sampled set.
pub fn random_node_sample(g: &Graph, spec: &SamplerSpec) -> Result<Graph> {
    spec.validate()?;
    if g.is_empty() {
        return Err(Error::Domain("sampling an empty graph".into()));
    }
    let n = g.n();
    let k = target_count(n, spec.sr).min(n);
    let mut rng = seeded_rng(spec.seed);
    // Partial Fisher-Yates: the first k slots become the sample.
    let mut order: Vec<u32> = (0..n as u32).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        order.swap(i, j);
    }
    let mut keep = order[..k].to_vec();
    keep.sort_unstable();
    Ok(g.induced_subgraph(&keep))
}

/// Transition weight of the common-neighbor-aware walk:
/// `1 - |CN(u,v)| / min(deg u, deg v)`, floored at a small positive value
/// so the walk never stalls on cliques.
pub fn cnarw_weight(g: &Graph, u: u32, v: u32) -> f64 {
    const FLOOR: f64 = 1e-6;
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let mut common = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    let w = 1.0 - common as f64 / a.len().min(b.len()) as f64;
    w.max(FLOOR)
}

enum WalkKind {
    Mhrw,
    Cnarw,
}

fn walk_sample(g: &Graph, spec: &SamplerSpec, kind: WalkKind) -> Result<Graph> {
    spec.validate()?;
    if g.is_empty() {
        return Err(Error::Domain("sampling an empty graph".into()));
    }
    let target = target_count(g.n(), spec.sr).min(g.n());
    // Walks need reachability; a disconnected graph is replaced by its LCC.
    let lcc;
    let walk_graph = if g.is_connected()? {
        g
    } else {
        lcc = g.largest_connected_component()?;
        &lcc
    };
    if target > walk_graph.n() {
        return Err(Error::Precondition(format!(
            "walk sampler cannot collect {target} nodes from a component of {}",
            walk_graph.n()
        )));
    }

    let mut rng = seeded_rng(spec.seed);
    let mut visited = vec![false; walk_graph.n()];
    let mut collected: Vec<u32> = Vec::with_capacity(target);
    let collect = |node: u32, visited: &mut Vec<bool>, collected: &mut Vec<u32>| {
        if !visited[node as usize] {
            visited[node as usize] = true;
            collected.push(node);
        }
    };

    let mut current = rng.random_range(0..walk_graph.n()) as u32;
    let mut steps = 0usize;
    if spec.burn_in == 0 {
        collect(current, &mut visited, &mut collected);
    }
    // Generous stall guard; a connected walk collects long before this.
    let max_steps = 100_000_000usize;
    while collected.len() < target {
        if steps >= max_steps {
            return Err(Error::Precondition(
                "walk sampler exceeded its step budget before collecting enough nodes".into(),
            ));
        }
        steps += 1;
        let nbrs = walk_graph.neighbors(current);
        if nbrs.is_empty() {
            // Single-node component; target == 1 was handled above.
            return Err(Error::Precondition("walk started on an isolated node".into()));
        }
        let next = match kind {
            WalkKind::Mhrw => {
                let proposal = nbrs[rng.random_range(0..nbrs.len())];
                let accept = walk_graph.degree(current) as f64 / walk_graph.degree(proposal) as f64;
                if accept >= 1.0 || rng.random::<f64>() < accept {
                    proposal
                } else {
                    current
                }
            }
            WalkKind::Cnarw => {
                let weights: Vec<f64> = nbrs
                    .iter()
                    .map(|&v| cnarw_weight(walk_graph, current, v))
                    .collect();
                let total: f64 = weights.iter().sum();
                let mut draw = rng.random::<f64>() * total;
                let mut chosen = nbrs[nbrs.len() - 1];
                for (&v, &w) in nbrs.iter().zip(&weights) {
                    if draw < w {
                        chosen = v;
                        break;
                    }
                    draw -= w;
                }
                chosen
            }
        };
        current = next;
        if steps >= spec.burn_in {
            collect(current, &mut visited, &mut collected);
        }
    }
    collected.sort_unstable();
    Ok(walk_graph.induced_subgraph(&collected))
}

/// Metropolis–Hastings random-walk sample: from `u`, propose a uniform
/// neighbor `v` and accept with probability `min(1, deg u / deg v)`;
/// distinct visited nodes are collected until `ceil(sr * N)` of them are
/// found. Disconnected inputs are reduced to their LCC first.
pub fn mhrw_sample(g: &Graph, spec: &SamplerSpec) -> Result<Graph> {
    walk_sample(g, spec, WalkKind::Mhrw)
}

/// Common-neighbor-aware random-walk sample: the next hop is drawn with
/// probability proportional to [`cnarw_weight`]. On triangle-free graphs
/// every weight is 1 and the walk degenerates to a simple random walk.
pub fn cnarw_sample(g: &Graph, spec: &SamplerSpec) -> Result<Graph> {
    walk_sample(g, spec, WalkKind::Cnarw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{barabasi_albert, erdos_renyi, GeneratorSpec};

    fn complete(n: usize) -> Graph {
        let edges = (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)));
        Graph::from_index_edges(n, edges)
    }

    #[test]
    fn rdn_full_rate_is_identity() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(50, 4.0, 1)).unwrap();
        let spec = SamplerSpec::new(SamplerMethod::Rdn, 1.0, 9);
        assert_eq!(random_node_sample(&g, &spec).unwrap(), g);
    }

    #[test]
    fn rdn_ceil_node_count() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(5000, 2.0, 1)).unwrap();
        let spec = SamplerSpec::new(SamplerMethod::Rdn, 1.0 / 8.0, 9);
        assert_eq!(random_node_sample(&g, &spec).unwrap().n(), 625);
    }

    #[test]
    fn rdn_returns_induced_subgraph() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(120, 3, 5)).unwrap();
        let spec = SamplerSpec::new(SamplerMethod::Rdn, 0.4, 2);
        let sub = random_node_sample(&g, &spec).unwrap();
        sub.validate().unwrap();
        // Every sampled pair that is adjacent in g must be adjacent in sub.
        for (i, &a) in sub.labels().iter().enumerate() {
            for &b in &sub.labels()[i + 1..] {
                let (gu, gv) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
                let (su, sv) = (sub.index_of(a).unwrap(), sub.index_of(b).unwrap());
                assert_eq!(g.has_edge(gu, gv), sub.has_edge(su, sv));
            }
        }
    }

    #[test]
    fn rdn_deterministic() {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(200, 4.0, 1)).unwrap();
        let spec = SamplerSpec::new(SamplerMethod::Rdn, 0.25, 77);
        assert_eq!(
            random_node_sample(&g, &spec).unwrap(),
            random_node_sample(&g, &spec).unwrap()
        );
    }

    #[test]
    fn rdn_rejects_bad_rate() {
        let g = complete(4);
        assert!(random_node_sample(&g, &SamplerSpec::new(SamplerMethod::Rdn, 0.0, 0)).is_err());
        assert!(random_node_sample(&g, &SamplerSpec::new(SamplerMethod::Rdn, 1.5, 0)).is_err());
    }

    #[test]
    fn walks_collect_exact_count() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(300, 3, 8)).unwrap();
        for method in [SamplerMethod::Mhrw, SamplerMethod::Cnarw] {
            let spec = SamplerSpec::new(method, 0.21, 4);
            let sub = sample(&g, &spec).unwrap();
            assert_eq!(sub.n(), (0.21f64 * 300.0).ceil() as usize);
            sub.validate().unwrap();
        }
    }

    #[test]
    fn walk_full_rate_collects_everything() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(60, 2, 8)).unwrap();
        let spec = SamplerSpec::new(SamplerMethod::Mhrw, 1.0, 4);
        let sub = mhrw_sample(&g, &spec).unwrap();
        assert_eq!(sub, g);
    }

    #[test]
    fn walk_on_disconnected_uses_lcc() {
        // Triangle {0,1,2} plus isolated edge {3,4}.
        let g = Graph::from_index_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]);
        let spec = SamplerSpec::new(SamplerMethod::Mhrw, 0.5, 3);
        let sub = mhrw_sample(&g, &spec).unwrap();
        assert!(sub.labels().iter().all(|&l| l <= 2));
        // Demanding more nodes than the LCC holds fails loudly.
        let spec = SamplerSpec::new(SamplerMethod::Mhrw, 0.9, 3);
        assert!(matches!(mhrw_sample(&g, &spec), Err(Error::Precondition(_))));
    }

    #[test]
    fn mhrw_stationary_distribution_is_uniform() {
        // Irregular connected 7-node graph; long-run visit frequencies of
        // the Metropolis walk must be uniform.
        let g = Graph::from_index_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (2, 5)],
        );
        let mut rng = seeded_rng(42);
        let mut counts = vec![0u64; 7];
        let mut current: u32 = 0;
        let steps = 5_000_000u64;
        for _ in 0..steps {
            let nbrs = g.neighbors(current);
            let proposal = nbrs[rng.random_range(0..nbrs.len())];
            let accept = g.degree(current) as f64 / g.degree(proposal) as f64;
            if accept >= 1.0 || rng.random::<f64>() < accept {
                current = proposal;
            }
            counts[current as usize] += 1;
        }
        let expected = steps as f64 / 7.0;
        for (node, &c) in counts.iter().enumerate() {
            let rel = (c as f64 - expected).abs() / expected;
            assert!(rel < 0.02, "node {node}: relative deviation {rel}");
        }
    }

    #[test]
    fn cnarw_weights_on_k4_are_uniform() {
        // Every K4 pair shares two common neighbors of min-degree 3, so
        // all transition weights are equal.
        let g = complete(4);
        let w01 = cnarw_weight(&g, 0, 1);
        for (u, v) in [(0u32, 2u32), (0, 3), (1, 2), (2, 3)] {
            assert!((cnarw_weight(&g, u, v) - w01).abs() < 1e-15);
        }
        assert!((w01 - (1.0 - 2.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn cnarw_weight_is_one_on_triangle_free_graphs() {
        // A 6-ring has no triangles, so all weights are exactly 1.
        let g = Graph::from_index_edges(6, (0..6u32).map(|i| (i, (i + 1) % 6)));
        for u in 0..6u32 {
            for &v in g.neighbors(u) {
                assert_eq!(cnarw_weight(&g, u, v), 1.0);
            }
        }
    }

    #[test]
    fn walks_deterministic() {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(200, 3, 8)).unwrap();
        for method in [SamplerMethod::Mhrw, SamplerMethod::Cnarw] {
            let spec = SamplerSpec::new(method, 0.3, 11);
            assert_eq!(sample(&g, &spec).unwrap(), sample(&g, &spec).unwrap());
        }
    }
}
