//! Property tests for the structural and numeric invariants.

use proptest::prelude::*;

use netshrink_core::generate::{barabasi_albert, erdos_renyi, GeneratorSpec};
use netshrink_core::graph::Graph;
use netshrink_core::metrics::{
    f_overlap, f_overlap_opts, linspace, Interpolation, DEFAULT_FINE_GRID,
};
use netshrink_core::reduce::{edge_prune, nrdc, ReductionParams};
use netshrink_core::sample::{sample, SamplerMethod, SamplerSpec};

fn arbitrary_edges() -> impl Strategy<Value = Vec<(u64, u64)>> {
    prop::collection::vec((0u64..40, 0u64..40), 0..120)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_graphs_always_satisfy_invariants(edges in arbitrary_edges()) {
        let g = Graph::from_edge_list(edges);
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn construction_is_order_independent(edges in arbitrary_edges(), seed in 0u64..1000) {
        let g1 = Graph::from_edge_list(edges.clone());
        // Deterministic shuffle plus random endpoint swaps.
        let mut shuffled = edges;
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for i in (1..shuffled.len()).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            shuffled.swap(i, j);
            if next() % 2 == 0 {
                let (a, b) = shuffled[i];
                shuffled[i] = (b, a);
            }
        }
        let g2 = Graph::from_edge_list(shuffled);
        prop_assert_eq!(&g1, &g2);
        if !g1.is_empty() {
            prop_assert_eq!(g1.average_degree().unwrap(), g2.average_degree().unwrap());
        }
    }

    #[test]
    fn lcc_is_idempotent(edges in arbitrary_edges()) {
        let g = Graph::from_edge_list(edges);
        prop_assume!(!g.is_empty());
        let once = g.largest_connected_component().unwrap();
        let twice = once.largest_connected_component().unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn regular_graphs_have_zero_heterogeneity(n in 3usize..40) {
        let ring = Graph::from_index_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32)));
        prop_assert!(ring.heterogeneity_index().unwrap().abs() <= 1e-12);
    }

    #[test]
    fn ba_edge_count_is_exact(n in 2usize..80, m in 1usize..6, seed in 0u64..100) {
        prop_assume!(m < n);
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(n, m, seed)).unwrap();
        prop_assert_eq!(g.m(), m * (m - 1) / 2 + m * (n - m));
        prop_assert!(g.is_connected().unwrap());
    }

    #[test]
    fn nrdc_keeps_exact_count_and_nests(seed in 0u64..50, qa in 0.0f64..0.9, qb in 0.0f64..0.9) {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(60, 4.0, seed)).unwrap();
        let (lo, hi) = if qa <= qb { (qa, qb) } else { (qb, qa) };
        let run = |q: f64| {
            let (sub, _) = nrdc(&g, &ReductionParams { q, lcc_fallback: false, ..ReductionParams::default() }).unwrap();
            sub
        };
        let big = run(lo);
        let small = run(hi);
        prop_assert_eq!(big.n(), 60 - (lo * 60.0).floor() as usize);
        prop_assert_eq!(small.n(), 60 - (hi * 60.0).floor() as usize);
        // One-shot ranking makes removal sets nested.
        prop_assert!(small.labels().iter().all(|l| big.labels().contains(l)));
    }

    #[test]
    fn edge_prune_stays_connected_and_hits_target(seed in 0u64..40, shrink in 0.3f64..0.95) {
        let g = erdos_renyi(&GeneratorSpec::erdos_renyi(50, 7.0, seed))
            .unwrap()
            .largest_connected_component()
            .unwrap();
        prop_assume!(g.n() >= 10);
        let target = g.average_degree().unwrap() * shrink;
        let (out, trace) = edge_prune(&g, target, 2, 0.1).unwrap();
        prop_assert!(out.is_connected().unwrap());
        prop_assert!(out.validate().is_ok());
        let k = out.average_degree().unwrap();
        if trace.stalled {
            prop_assert!(k >= target);
        } else {
            prop_assert!(k - target < 0.1);
            prop_assert!(k - target >= -2.0 / out.n() as f64 - 1e-12);
        }
    }

    #[test]
    fn samplers_return_exact_induced_subgraphs(seed in 0u64..30, sr in 0.05f64..1.0) {
        let g = barabasi_albert(&GeneratorSpec::barabasi_albert(80, 3, seed)).unwrap();
        for method in [SamplerMethod::Rdn, SamplerMethod::Mhrw, SamplerMethod::Cnarw] {
            let sub = sample(&g, &SamplerSpec::new(method, sr, seed)).unwrap();
            prop_assert_eq!(sub.n(), (sr * 80.0).ceil() as usize);
            prop_assert!(sub.validate().is_ok());
            // Induced property: sampled nodes keep exactly g's edges.
            for (i, &a) in sub.labels().iter().enumerate() {
                for &b in &sub.labels()[i + 1..] {
                    let in_g = g.has_edge(g.index_of(a).unwrap(), g.index_of(b).unwrap());
                    let in_sub = sub.has_edge(sub.index_of(a).unwrap(), sub.index_of(b).unwrap());
                    prop_assert_eq!(in_g, in_sub);
                }
            }
        }
    }

    #[test]
    fn f_overlap_is_symmetric_and_bounded(
        seed in 0u64..200,
        scale_a in 0.0f64..0.9,
        scale_b in 0.0f64..0.9,
    ) {
        let beta: Vec<f64> = linspace(0.0, 2.0, 21);
        let curve = |scale: f64, bend: f64| -> Vec<f64> {
            beta.iter().map(|&b| 0.1 + scale * (1.0 - (-bend * b).exp())).collect()
        };
        let bend = 0.5 + (seed % 7) as f64 * 0.4;
        let a = curve(scale_a, bend);
        let b = curve(scale_b, bend + 0.3);
        let ab = f_overlap(&beta, &a, &b).unwrap();
        let ba = f_overlap(&beta, &b, &a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(ab.f_overlap > 0.0 && ab.f_overlap <= 1.0);
        prop_assert!((ab.f_overlap - 1.0 / (1.0 + ab.s_delta)).abs() < 1e-15);
    }

    #[test]
    fn f_overlap_converged_in_grid_and_interpolation(
        scale in 0.1f64..0.8,
        bend in 0.5f64..3.0,
    ) {
        // Smooth, saturating profile shapes on the standard 21-point grid.
        let beta: Vec<f64> = linspace(0.0, 2.0, 21);
        let a: Vec<f64> = beta.iter().map(|&b| 0.1 + scale * (1.0 - (-bend * b).exp())).collect();
        let b: Vec<f64> = beta.iter().map(|&b| 0.1 + 0.8 * scale * (b / 2.0).powf(1.2)).collect();
        let base = f_overlap(&beta, &a, &b).unwrap();
        let finer = f_overlap_opts(&beta, &a, &b, Interpolation::Linear, 2 * DEFAULT_FINE_GRID - 1).unwrap();
        prop_assert!((base.f_overlap - finer.f_overlap).abs() < 1e-3);
        let cubic = f_overlap_opts(&beta, &a, &b, Interpolation::Cubic, DEFAULT_FINE_GRID).unwrap();
        prop_assert!((base.f_overlap - cubic.f_overlap).abs() < 1e-3);
    }
}
