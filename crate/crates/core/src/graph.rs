//! Undirected simple graph with stable node labels.
//!
//! Nodes carry opaque non-negative integer labels that survive every
//! subgraph operation, so a node can be tracked across reduction levels.
//! Internally nodes are addressed by dense indices in ascending label
//! order; adjacency lists are sorted, which makes all iteration orders
//! (and therefore all tie-breaking downstream) deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Immutable undirected simple graph.
///
/// Invariants, enforced by every constructor:
/// - no self-loops, no parallel edges;
/// - adjacency is symmetric;
/// - `edge_count` equals half the degree sum;
/// - labels are strictly ascending and adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

/// Topology statistics of a graph: size, density, degree dispersion and
/// relative size of the largest connected component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkSummary {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub heterogeneity: f64,
    pub s_lcc: f64,
}

impl Graph {
    /// Builds a graph from labelled edge pairs.
    ///
    /// Self-loops are dropped (their endpoint still registers as a node),
    /// duplicate and reversed-duplicate edges collapse to one, and the
    /// result is independent of the input order.
    pub fn from_edge_list<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut nodes: BTreeSet<u64> = BTreeSet::new();
        let mut edges: BTreeSet<(u64, u64)> = BTreeSet::new();
        for (a, b) in pairs {
            nodes.insert(a);
            nodes.insert(b);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let labels: Vec<u64> = nodes.into_iter().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        let index = |label: u64| labels.binary_search(&label).expect("label registered") as u32;
        for (a, b) in &edges {
            let (i, j) = (index(*a), index(*b));
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        }
        // BTreeSet iteration inserts neighbors of each node in ascending
        // order of the *other* endpoint only for the lower endpoint; sort
        // to guarantee both directions.
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels,
            adj,
            edge_count: edges.len(),
        }
    }

    /// Builds a graph on nodes `0..n` from index pairs. Convenience for
    /// generators and tests; semantics match [`Graph::from_edge_list`]
    /// except that all `n` nodes exist even when untouched by edges.
    pub fn from_index_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut set: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (a, b) in edges {
            assert!((a as usize) < n && (b as usize) < n, "index out of range");
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b) in &set {
            adj[*a as usize].push(*b);
            adj[*b as usize].push(*a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels: (0..n as u64).collect(),
            adj,
            edge_count: set.len(),
        }
    }

    /// Direct constructor for modules that already hold valid parts:
    /// `labels` strictly ascending, `adj` sorted/symmetric/loop-free.
    pub(crate) fn from_parts(labels: Vec<u64>, adj: Vec<Vec<u32>>, edge_count: usize) -> Self {
        let g = Graph {
            labels,
            adj,
            edge_count,
        };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Node labels in ascending order.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Label of the node at `index`.
    pub fn label(&self, index: u32) -> u64 {
        self.labels[index as usize]
    }

    /// Index of the node carrying `label`, if present.
    pub fn index_of(&self, label: u64) -> Option<u32> {
        self.labels.binary_search(&label).ok().map(|i| i as u32)
    }

    pub fn degree(&self, index: u32) -> usize {
        self.adj[index as usize].len()
    }

    /// Neighbor indices of `index`, ascending.
    pub fn neighbors(&self, index: u32) -> &[u32] {
        &self.adj[index as usize]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Edges as label pairs `(a, b)` with `a < b`.
    pub fn edge_labels(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges().map(|(u, v)| (self.label(u), self.label(v)))
    }

    /// Average degree `2M/N`.
    pub fn average_degree(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::Domain("average degree of an empty graph".into()));
        }
        Ok(2.0 * self.edge_count as f64 / self.n() as f64)
    }

    /// Whether the graph consists of a single connected component.
    pub fn is_connected(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::Domain("connectivity of an empty graph".into()));
        }
        Ok(self.bfs_reach(0).len() == self.n())
    }

    fn bfs_reach(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.n()];
        let mut queue = std::collections::VecDeque::new();
        let mut out = Vec::new();
        seen[start as usize] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        out
    }

    /// Connected components as sorted index sets, ordered by their
    /// smallest member (equivalently smallest label).
    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n()];
        let mut components = Vec::new();
        for start in 0..self.n() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = std::collections::VecDeque::new();
            seen[start as usize] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Induced subgraph on the largest connected component. Ties are broken
    /// towards the component containing the smallest node label; original
    /// labels are preserved.
    pub fn largest_connected_component(&self) -> Result<Graph> {
        if self.is_empty() {
            return Err(Error::Domain("LCC of an empty graph".into()));
        }
        let components = self.connected_components();
        // Components are discovered in ascending order of their minimum
        // label, so keeping the first maximal one implements the
        // smallest-minimum-label tie-break.
        let mut best = &components[0];
        for candidate in &components[1..] {
            if candidate.len() > best.len() {
                best = candidate;
            }
        }
        Ok(self.induced_subgraph(best))
    }

    /// Induced subgraph on `keep` (sorted, deduplicated node indices).
    /// Node labels are preserved.
    pub fn induced_subgraph(&self, keep: &[u32]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]), "keep must be sorted");
        let mut position = vec![u32::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            position[old as usize] = new as u32;
        }
        let labels: Vec<u64> = keep.iter().map(|&i| self.label(i)).collect();
        let mut edge_count = 0;
        let adj: Vec<Vec<u32>> = keep
            .iter()
            .map(|&old| {
                let list: Vec<u32> = self.neighbors(old)
                    .iter()
                    .filter(|&&v| position[v as usize] != u32::MAX)
                    .map(|&v| position[v as usize])
                    .collect();
                edge_count += list.len();
                list
            })
            .collect();
        Graph {
            labels,
            adj,
            edge_count: edge_count / 2,
        }
    }

    /// Degree-dispersion index in `[0, 1]`: the Gini coefficient of the
    /// degree sequence. Zero exactly for regular graphs; grows with the
    /// spread of the degrees (a star is the extreme connected case).
    pub fn heterogeneity_index(&self) -> Result<f64> {
        let n = self.n();
        if n < 2 {
            return Err(Error::Domain(
                "heterogeneity index needs at least two nodes".into(),
            ));
        }
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        let total: f64 = degrees.iter().map(|&d| d as f64).sum();
        if total == 0.0 {
            return Ok(0.0); // edgeless graphs are regular
        }
        let weighted: f64 = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| (2.0 * (i + 1) as f64 - n as f64 - 1.0) * d as f64)
            .sum();
        Ok(weighted / (n as f64 * total))
    }

    /// All summary statistics at once.
    pub fn summarize(&self) -> Result<NetworkSummary> {
        if self.n() < 2 {
            return Err(Error::Domain("summary needs at least two nodes".into()));
        }
        let lcc_size = self
            .connected_components()
            .iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0);
        Ok(NetworkSummary {
            n: self.n(),
            m: self.m(),
            avg_degree: self.average_degree()?,
            heterogeneity: self.heterogeneity_index()?,
            s_lcc: lcc_size as f64 / self.n() as f64,
        })
    }

    /// Copy with labels re-compacted to `0..n`. Explicit export option;
    /// nothing else in the toolkit re-labels nodes.
    pub fn compact_labels(&self) -> Graph {
        Graph {
            labels: (0..self.n() as u64).collect(),
            adj: self.adj.clone(),
            edge_count: self.edge_count,
        }
    }

    /// Full structural invariant scan. Cheap enough for tests and debug
    /// assertions on every graph the toolkit produces.
    pub fn validate(&self) -> Result<()> {
        if self.labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("labels not strictly ascending".into()));
        }
        let mut degree_sum = 0usize;
        for (u, nbrs) in self.adj.iter().enumerate() {
            degree_sum += nbrs.len();
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Domain(format!("adjacency of {u} not sorted/simple")));
            }
            for &v in nbrs {
                if v as usize == u {
                    return Err(Error::Domain(format!("self-loop at {u}")));
                }
                if !self.has_edge(v, u as u32) {
                    return Err(Error::Domain(format!("asymmetric edge ({u}, {v})")));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(Error::Domain(format!(
                "edge count {} inconsistent with degree sum {}",
                self.edge_count, degree_sum
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n as u32 - 1).map(|i| (i, i + 1)))
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)));
        Graph::from_index_edges(n, edges)
    }

    fn ring(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32)))
    }

    #[test]
    fn from_edge_list_dedups_and_drops_self_loops() {
        let g = Graph::from_edge_list([(0, 1), (1, 0), (2, 2), (1, 2)]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        g.validate().unwrap();
    }

    #[test]
    fn from_edge_list_empty() {
        let g = Graph::from_edge_list(std::iter::empty());
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn from_edge_list_order_independent() {
        let edges = [(5u64, 1u64), (1, 9), (9, 5), (3, 9)];
        let g1 = Graph::from_edge_list(edges);
        let mut rev = edges;
        rev.reverse();
        let g2 = Graph::from_edge_list(rev.iter().map(|&(a, b)| (b, a)));
        assert_eq!(g1, g2);
    }

    #[test]
    fn labels_survive_subgraphs() {
        let g = Graph::from_edge_list([(10, 20), (20, 30), (40, 50)]);
        let lcc = g.largest_connected_component().unwrap();
        assert_eq!(lcc.labels(), &[10, 20, 30]);
    }

    #[test]
    fn average_degree_examples() {
        assert_eq!(complete(2).average_degree().unwrap(), 1.0);
        assert_eq!(complete(3).average_degree().unwrap(), 2.0);
        assert!(Graph::from_edge_list(std::iter::empty())
            .average_degree()
            .is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(path(3).is_connected().unwrap());
        let two_edges = Graph::from_index_edges(4, [(0, 1), (2, 3)]);
        assert!(!two_edges.is_connected().unwrap());
    }

    #[test]
    fn lcc_identity_on_connected() {
        let g = path(5);
        assert_eq!(g.largest_connected_component().unwrap(), g);
    }

    #[test]
    fn lcc_tie_breaks_on_smallest_label() {
        // Two triangles plus an isolated edge; triangle {0,1,2} wins.
        let g = Graph::from_index_edges(
            8,
            [(3, 4), (4, 5), (5, 3), (0, 1), (1, 2), (2, 0), (6, 7)],
        );
        let lcc = g.largest_connected_component().unwrap();
        assert_eq!(lcc.labels(), &[0, 1, 2]);
        assert_eq!(lcc.m(), 3);
    }

    #[test]
    fn lcc_idempotent() {
        let g = Graph::from_index_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)]);
        let once = g.largest_connected_component().unwrap();
        let twice = once.largest_connected_component().unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn heterogeneity_zero_for_regular() {
        assert!(ring(10).heterogeneity_index().unwrap().abs() <= 1e-12);
        assert!(complete(4).heterogeneity_index().unwrap().abs() <= 1e-12);
    }

    #[test]
    fn heterogeneity_star_is_large_and_bounded() {
        let star = Graph::from_index_edges(16, (1..16u32).map(|i| (0, i)));
        let h = star.heterogeneity_index().unwrap();
        assert!(h > 0.4 && h <= 1.0, "h = {h}");
        // Exact closed form for a star on n nodes: (n - 2) / (2n).
        assert!((h - 14.0 / 32.0).abs() < 1e-12);
    }

    #[test]
    fn heterogeneity_needs_two_nodes() {
        let single = Graph::from_edge_list([(7, 7)]);
        assert_eq!(single.n(), 1);
        assert!(single.heterogeneity_index().is_err());
    }

    #[test]
    fn summarize_k4() {
        let s = complete(4).summarize().unwrap();
        assert_eq!((s.n, s.m), (4, 6));
        assert_eq!(s.avg_degree, 3.0);
        assert_eq!(s.heterogeneity, 0.0);
        assert_eq!(s.s_lcc, 1.0);
    }

    #[test]
    fn induced_subgraph_preserves_structure() {
        let g = complete(5);
        let sub = g.induced_subgraph(&[0, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.m(), 3);
        assert_eq!(sub.labels(), &[0, 2, 4]);
        sub.validate().unwrap();
    }
}
