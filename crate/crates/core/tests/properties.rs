mod common;

use common::setup;
use pqc_core::edge::all_edges;
use pqc_core::graph::{canonical_form, cycle_census};
use pqc_core::{
    capacity_outer_bound, edge_index, mu, partial_bound, run, Edge, EdgeSet, Graph, Method,
    MonomialOrder, SearchConfig,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn order_strategy(f: usize) -> impl Strategy<Value = MonomialOrder> {
    Just(all_edges(f))
        .prop_shuffle()
        .prop_map(move |edges| MonomialOrder::new(f, edges).unwrap())
}

fn perm_strategy(f: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=f).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_index_round_trips(f in 2usize..=16, seed in any::<u64>()) {
        let i = (seed % mu(f) as u64) as usize;
        let x = Edge::from_index(i, f).unwrap();
        prop_assert_eq!(edge_index(x, f).unwrap(), i);
        prop_assert!(x.k() < x.l() && x.l() <= f);
    }

    #[test]
    fn wire_format_round_trips(order in (3usize..=8).prop_flat_map(order_strategy)) {
        let f = order.vertex_count();
        prop_assert_eq!(MonomialOrder::from_wire(f, &order.to_wire()).unwrap(), order);
    }

    #[test]
    fn bound_is_relabeling_invariant(
        (order, perm) in (3usize..=7).prop_flat_map(|f| (order_strategy(f), perm_strategy(f)))
    ) {
        let f = order.vertex_count();
        let (params, engine) = setup(f, 2);
        let a = capacity_outer_bound(&order, &params, &engine).unwrap();
        let b = capacity_outer_bound(&order.relabel(&perm), &params, &engine).unwrap();
        prop_assert!((a.bound - b.bound).abs() <= 1e-12);
    }

    #[test]
    fn report_is_well_formed(order in (2usize..=7).prop_flat_map(order_strategy), n in 1u32..=4) {
        let f = order.vertex_count();
        let (params, engine) = setup(f, n);
        let r = capacity_outer_bound(&order, &params, &engine).unwrap();
        prop_assert!(r.bound > 0.0 && r.bound <= 1.0 + 1e-15);
        prop_assert!((r.cond_entropies[0] - r.h_min).abs() < 1e-15);
        prop_assert!(r.cond_entropies.iter().all(|&h| (-1e-12..=1.0 + 1e-12).contains(&h)));
        let joint = engine.joint_entropy(EdgeSet::complete(f)).unwrap();
        prop_assert!((r.total_entropy() - joint).abs() < 1e-12);
    }

    #[test]
    fn conditioning_never_increases_entropy(
        (f, given, extra) in (3usize..=7).prop_flat_map(|f| {
            let edges = all_edges(f);
            (Just(f), subsequence(edges.clone(), 0..=edges.len()), subsequence(edges, 0..=mu(f)))
        })
    ) {
        let (_, engine) = setup(f, 2);
        let a = EdgeSet::from_edges(f, given).unwrap();
        let b = a.union(EdgeSet::from_edges(f, extra).unwrap());
        for x in all_edges(f) {
            if b.contains(x) {
                continue;
            }
            let ha = engine.conditional_entropy(x, a).unwrap();
            let hb = engine.conditional_entropy(x, b).unwrap();
            prop_assert!(hb <= ha + 1e-12);
        }
    }

    #[test]
    fn partial_bound_picks_the_most_informative_candidate(
        (f, prefix) in (4usize..=7).prop_flat_map(|f| (Just(f), subsequence(all_edges(f), 1..=mu(f) - 2)).prop_flat_map(|(f, s)| (Just(f), Just(s).prop_shuffle()))),
        n in 1u32..=3,
    ) {
        let (params, engine) = setup(f, n);
        let given = EdgeSet::from_edges(f, prefix.iter().copied()).unwrap();
        let mut best_pb = f64::INFINITY;
        let mut best_h = f64::NEG_INFINITY;
        let mut scored = Vec::new();
        for x in all_edges(f).into_iter().filter(|x| !given.contains(*x)) {
            let mut ext = prefix.clone();
            ext.push(x);
            let pb = partial_bound(&ext, &params, &engine).unwrap();
            let h = engine.conditional_entropy(x, given).unwrap();
            best_pb = best_pb.min(pb);
            best_h = best_h.max(h);
            scored.push((pb, h));
        }
        // every candidate with the largest entropy attains the smallest bound
        for (pb, h) in scored {
            if h == best_h {
                prop_assert_eq!(pb, best_pb);
            }
        }
    }

    #[test]
    fn canonical_form_is_a_class_invariant(
        (set, perm) in (3usize..=6).prop_flat_map(|f| (subsequence(all_edges(f), 0..=mu(f)), perm_strategy(f)))
    ) {
        let f = perm.len();
        let s = EdgeSet::from_edges(f, set).unwrap();
        let t = s.relabel(&perm);
        prop_assert_eq!(canonical_form(s), canonical_form(t));
        prop_assert_eq!(cycle_census(&Graph::from_edge_set(s)), cycle_census(&Graph::from_edge_set(t)));
    }

    #[test]
    fn random_search_is_reproducible(seed in any::<u64>(), budget in 1u64..=20) {
        let (params, engine) = setup(5, 2);
        let mut cfg = SearchConfig::new(Method::DirectedRandom, params);
        cfg.seed = seed;
        cfg.budget = budget;
        let a = run(&cfg, &engine).unwrap();
        let b = run(&cfg, &engine).unwrap();
        prop_assert_eq!(a.best.bound.to_bits(), b.best.bound.to_bits());
        prop_assert_eq!(a.best.order, b.best.order);
        prop_assert_eq!(a.evaluations, budget);
    }
}

#[test]
fn every_method_returns_a_permutation() {
    for f in 3..=7 {
        let (params, engine) = setup(f, 2);
        for method in [
            Method::Ec,
            Method::EnhancedEc,
            Method::Ldf,
            Method::Ebg,
            Method::DirectedRandom,
        ] {
            let mut cfg = SearchConfig::new(method, params);
            cfg.budget = 10;
            let r = run(&cfg, &engine).unwrap();
            let set = EdgeSet::from_edges(f, r.best.order.edges().iter().copied()).unwrap();
            assert_eq!(set, EdgeSet::complete(f), "{method} f={f}");
            assert!(r.evaluations >= 1);
        }
    }
}

#[test]
fn ebg_is_deterministic() {
    for f in 4..=8 {
        let (params, engine) = setup(f, 2);
        let a = run(&SearchConfig::new(Method::Ebg, params), &engine).unwrap();
        let b = run(&SearchConfig::new(Method::Ebg, params), &engine).unwrap();
        assert_eq!(a, b);
    }
}
