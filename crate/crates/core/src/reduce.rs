//! Network reduction: degree-ordered node removal (NRDC), the
//! connectivity-preserving edge pruning sweep, and the composite pipeline
//! (NRDC′) that prunes a removal subgraph back down to the original
//! average degree whenever removal made it denser.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters controlling a reduction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionParams {
    /// Node removal ratio in `[0, 1)`.
    pub q: f64,
    /// Minimum degree a node must exceed before one of its edges may be
    /// pruned.
    pub k_min: usize,
    /// Pruning stops once `avg_degree - target < degree_tolerance`.
    pub degree_tolerance: f64,
    /// Replace a disconnected result by its largest connected component.
    pub lcc_fallback: bool,
}

impl Default for ReductionParams {
    fn default() -> Self {
        ReductionParams {
            q: 0.0,
            k_min: 2,
            degree_tolerance: 0.1,
            lcc_fallback: false,
        }
    }
}

impl ReductionParams {
    /// Removal ratio for reduction level `l`: `q = 1 - 1/2^l`, so the
    /// subgraph keeps a `1/2^l` fraction of the nodes.
    pub fn from_level(level: u32) -> Self {
        ReductionParams {
            q: 1.0 - 0.5f64.powi(level as i32),
            ..ReductionParams::default()
        }
    }

    pub fn with_q(q: f64) -> Self {
        ReductionParams {
            q,
            ..ReductionParams::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.q) {
            return Err(Error::Config(format!("removal ratio {} outside [0, 1)", self.q)));
        }
        if self.k_min < 1 {
            return Err(Error::Config("k_min must be at least 1".into()));
        }
        if !(self.degree_tolerance > 0.0) {
            return Err(Error::Config("degree tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// Audit record of one reduction: what was removed, in which order, and
/// the resulting density/connectivity.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReductionTrace {
    /// Labels of removed nodes, in removal order.
    pub removed_nodes: Vec<u64>,
    /// Label pairs of pruned edges, in pruning order.
    pub pruned_edges: Vec<(u64, u64)>,
    pub avg_degree_before: f64,
    pub avg_degree_after: f64,
    pub connected_after: bool,
    /// A full pruning sweep removed nothing before the target was reached.
    pub stalled: bool,
}

/// Node removal by degree centrality: deletes the `floor(q N)` nodes with
/// the lowest degree in the *original* graph (ties towards smaller
/// labels) and returns the induced subgraph on the survivors. With
/// `lcc_fallback` a disconnected result is replaced by its LCC.
pub fn nrdc(g: &Graph, params: &ReductionParams) -> Result<(Graph, ReductionTrace)> {
    params.validate()?;
    if g.n() < 2 {
        return Err(Error::Domain("reduction needs at least two nodes".into()));
    }
    let n = g.n();
    let remove_count = (params.q * n as f64).floor() as usize;
    let mut order: Vec<u32> = (0..n as u32).collect();
    // One-shot ranking against the original degree sequence; label order
    // breaks ties because the initial order is ascending and the sort is
    // stable.
    order.sort_by_key(|&i| g.degree(i));
    let removed = &order[..remove_count];
    let mut survivors: Vec<u32> = order[remove_count..].to_vec();
    survivors.sort_unstable();

    let mut trace = ReductionTrace {
        removed_nodes: removed.iter().map(|&i| g.label(i)).collect(),
        avg_degree_before: g.average_degree()?,
        ..ReductionTrace::default()
    };

    let mut sub = g.induced_subgraph(&survivors);
    let mut connected = !sub.is_empty() && sub.is_connected()?;
    if params.lcc_fallback && !connected {
        let lcc = sub.largest_connected_component()?;
        let kept: BTreeSet<u64> = lcc.labels().iter().copied().collect();
        for &label in sub.labels() {
            if !kept.contains(&label) {
                trace.removed_nodes.push(label);
            }
        }
        sub = lcc;
        connected = true;
    }
    trace.avg_degree_after = if sub.is_empty() { 0.0 } else { sub.average_degree()? };
    trace.connected_after = connected;
    Ok((sub, trace))
}

/// Mutable adjacency scratch used by the pruning sweep.
struct PruneState {
    adj: Vec<BTreeSet<u32>>,
    edge_count: usize,
}

impl PruneState {
    fn new(g: &Graph) -> Self {
        PruneState {
            adj: (0..g.n() as u32)
                .map(|u| g.neighbors(u).iter().copied().collect())
                .collect(),
            edge_count: g.m(),
        }
    }

    fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    fn avg_degree(&self) -> f64 {
        2.0 * self.edge_count as f64 / self.adj.len() as f64
    }

    fn remove_edge(&mut self, u: u32, v: u32) {
        self.adj[u as usize].remove(&v);
        self.adj[v as usize].remove(&u);
        self.edge_count -= 1;
    }

    fn add_edge(&mut self, u: u32, v: u32) {
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
        self.edge_count += 1;
    }

    /// Whether `target` is reachable from `start`; with a connected graph
    /// before an edge removal this decides connectivity after it.
    fn reaches(&self, start: u32, target: u32) -> bool {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(u) = stack.pop() {
            if u == target {
                return true;
            }
            for &v in &self.adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    fn into_graph(self, labels: &[u64]) -> Graph {
        let adj: Vec<Vec<u32>> = self
            .adj
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        Graph::from_parts(labels.to_vec(), adj, self.edge_count)
    }
}

/// Edge pruning sweep. Repeatedly walks the nodes in ascending label
/// order; a node whose current degree exceeds `k_min` loses the edge to
/// its lowest-degree neighbor (ties towards smaller labels) unless that
/// removal would disconnect the graph, in which case the edge is put
/// back. Terminates as soon as the average degree is within
/// `degree_tolerance` above `target_avg_degree`, or when a full sweep
/// removes nothing (recorded as a stall).
pub fn edge_prune(
    g_sub: &Graph,
    target_avg_degree: f64,
    k_min: usize,
    degree_tolerance: f64,
) -> Result<(Graph, ReductionTrace)> {
    if g_sub.is_empty() {
        return Err(Error::Domain("pruning an empty graph".into()));
    }
    if !g_sub.is_connected()? {
        return Err(Error::Precondition("edge pruning requires a connected graph".into()));
    }
    if !(degree_tolerance > 0.0) {
        return Err(Error::Config("degree tolerance must be positive".into()));
    }
    let before = g_sub.average_degree()?;
    let mut trace = ReductionTrace {
        avg_degree_before: before,
        avg_degree_after: before,
        connected_after: true,
        ..ReductionTrace::default()
    };
    if before - target_avg_degree < degree_tolerance {
        return Ok((g_sub.clone(), trace));
    }

    let mut state = PruneState::new(g_sub);
    let n = g_sub.n() as u32;
    'outer: loop {
        let mut removed_in_sweep = 0usize;
        for u in 0..n {
            if state.degree(u) <= k_min {
                continue;
            }
            // Lowest-degree neighbor; BTreeSet iteration is ascending, so
            // the strict `<` keeps the smallest label among ties.
            let v = state.adj[u as usize]
                .iter()
                .copied()
                .min_by_key(|&v| (state.degree(v), v))
                .expect("degree > k_min >= 1");
            state.remove_edge(u, v);
            if !state.reaches(u, v) {
                state.add_edge(u, v);
            } else {
                removed_in_sweep += 1;
                trace.pruned_edges.push((g_sub.label(u), g_sub.label(v)));
            }
            if state.avg_degree() - target_avg_degree < degree_tolerance {
                break 'outer;
            }
        }
        if removed_in_sweep == 0 {
            trace.stalled = true;
            break;
        }
    }
    trace.avg_degree_after = state.avg_degree();
    let pruned = state.into_graph(g_sub.labels());
    debug_assert!(pruned.is_connected().unwrap_or(false));
    Ok((pruned, trace))
}

/// Composite reduction: NRDC, then (with `lcc_fallback`) the LCC of a
/// disconnected result, then edge pruning towards the *original* graph's
/// average degree whenever removal left the subgraph denser. Homogeneous
/// networks, whose density does not rise under removal, skip the pruning
/// step entirely.
pub fn nrdc_prime(g: &Graph, params: &ReductionParams) -> Result<(Graph, ReductionTrace)> {
    let target = g.average_degree()?;
    let (sub, mut trace) = nrdc(g, params)?;
    if sub.is_empty() || sub.average_degree()? <= target {
        return Ok((sub, trace));
    }
    let (pruned, prune_trace) = edge_prune(&sub, target, params.k_min, params.degree_tolerance)?;
    trace.pruned_edges = prune_trace.pruned_edges;
    trace.avg_degree_after = prune_trace.avg_degree_after;
    trace.connected_after = prune_trace.connected_after;
    trace.stalled = prune_trace.stalled;
    Ok((pruned, trace))
}

/// One row of a degree/LCC evolution table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeEvolutionRow {
    pub q: f64,
    /// Average degree of the removal subgraph relative to the original.
    pub degree_ratio: f64,
    /// Relative size of the subgraph's largest connected component.
    pub s_lcc: f64,
}

/// Average-degree ratio and relative LCC size after NRDC (no fallback)
/// at each removal ratio in `q_grid`.
pub fn degree_evolution(g: &Graph, q_grid: &[f64]) -> Result<Vec<DegreeEvolutionRow>> {
    let base = g.average_degree()?;
    q_grid
        .iter()
        .map(|&q| {
            let params = ReductionParams {
                q,
                lcc_fallback: false,
                ..ReductionParams::default()
            };
            let (sub, _) = nrdc(g, &params)?;
            let summary = sub.summarize()?;
            Ok(DegreeEvolutionRow {
                q,
                degree_ratio: summary.avg_degree / base,
                s_lcc: summary.s_lcc,
            })
        })
        .collect()
}
