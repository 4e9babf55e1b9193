//! Longest-distance-first ordering.
//!
//! The outer edges (start edge, `f - 2` component joins, one periphery edge)
//! form a Hamiltonian cycle; the remaining inner edges are then added by
//! fewest induced short cycles.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::edge::{Edge, MonomialOrder};
use crate::error::{Error, Result};
use crate::graph::{connected_components, periphery, score_non_edges, CycleMode, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LdfStart {
    Edge(Edge),
    /// A uniformly random start edge drawn from the seed.
    Seeded(u64),
}

impl Default for LdfStart {
    fn default() -> Self {
        LdfStart::Edge(Edge::new(1, 2).expect("valid edge"))
    }
}

pub fn ldf_order(f: usize, start: LdfStart) -> Result<MonomialOrder> {
    if f < 3 {
        return Err(Error::UnsupportedVertexCount(f));
    }
    let mut g = Graph::empty(f)?;
    let first = match start {
        LdfStart::Edge(e) => {
            e.check(f)?;
            e
        }
        LdfStart::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = rng.gen_range(1..=f);
            let mut v = rng.gen_range(1..f);
            if v >= u {
                v += 1;
            }
            Edge::between(u, v)?
        }
    };
    g.add_edge(first)?;
    let mut partial = vec![first];

    for _ in 0..f - 2 {
        let comps = connected_components(&g);
        let pick = |c: &[usize]| -> Result<usize> {
            let mut best = None;
            let mut min_degree = 2;
            for &v in c {
                let d = g.degree(v)?;
                if d < min_degree {
                    min_degree = d;
                    best = Some(v);
                }
            }
            best.ok_or(Error::DisconnectedGraph)
        };
        let e = Edge::between(pick(&comps[0])?, pick(&comps[1])?)?;
        g.add_edge(e)?;
        partial.push(e);
    }

    let (u, v) = periphery(&g)?[0];
    let closing = Edge::between(u, v)?;
    g.add_edge(closing)?;
    partial.push(closing);

    if g.is_complete() {
        return MonomialOrder::new(f, partial);
    }
    order_inner_edges(&g, &partial)
}

/// Completes `partial` (the edges of `g`, in order) by repeatedly adding
/// the non-edge with the lexicographically smallest induced cycle vector.
pub fn order_inner_edges(g: &Graph, partial: &[Edge]) -> Result<MonomialOrder> {
    let f = g.vertex_count();
    if g.is_complete() {
        return Err(Error::GraphComplete);
    }
    if partial.len() != g.edge_count() || partial.iter().any(|&e| !g.contains(e)) {
        return Err(Error::InvalidConfig(
            "partial order must list exactly the edges of the graph".into(),
        ));
    }
    let mut g = *g;
    let mut order = partial.to_vec();
    loop {
        let remaining = g.non_edges();
        if remaining.len() <= 2 {
            order.extend(remaining);
            break;
        }
        // score_non_edges lists candidates by edge index; min_by keeps the first
        let (e, _) = score_non_edges(&g, CycleMode::ThroughEdge)
            .into_iter()
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("non-empty candidate set");
        g.add_edge(e)?;
        order.push(e);
    }
    MonomialOrder::new(f, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::{capacity_outer_bound, BoundParams};
    use crate::edge::EdgeSet;
    use crate::field::FieldSpec;
    use crate::graph::{is_maximum_matching, matching_size};

    fn e(k: usize, l: usize) -> Edge {
        Edge::new(k, l).unwrap()
    }

    fn bound(order: &MonomialOrder) -> f64 {
        let params = BoundParams::new(2, order.vertex_count(), FieldSpec::binary()).unwrap();
        capacity_outer_bound(order, &params, &params.engine().unwrap())
            .unwrap()
            .bound
    }

    #[test]
    fn small_values() {
        let o6 = ldf_order(6, LdfStart::default()).unwrap();
        assert_eq!(&o6.edges()[..3], &[e(1, 2), e(3, 4), e(5, 6)]);
        assert!(
            (bound(&o6) - 0.5197824997350).abs() < 1e-11,
            "{}",
            bound(&o6)
        );
        let o7 = ldf_order(7, LdfStart::default()).unwrap();
        assert!(
            (bound(&o7) - 0.5129571653366).abs() < 1e-11,
            "{}",
            bound(&o7)
        );
        assert_eq!(ldf_order(3, LdfStart::default()).unwrap().len(), 3);
        assert!(ldf_order(2, LdfStart::default()).is_err());
    }

    #[test]
    fn outer_edges_form_a_hamiltonian_cycle() {
        for f in 4..=10 {
            let order = ldf_order(f, LdfStart::default()).unwrap();
            let outer = Graph::from_edges(f, order.edges()[..f].iter().copied()).unwrap();
            assert!((1..=f).all(|v| outer.degree(v).unwrap() == 2), "f={f}");
            assert_eq!(connected_components(&outer).len(), 1);
        }
    }

    #[test]
    fn matching_prefix() {
        for f in 4..=12 {
            let order = ldf_order(f, LdfStart::default()).unwrap();
            let eta = matching_size(f);
            let head = EdgeSet::from_edges(f, order.edges()[..eta].iter().copied()).unwrap();
            assert!(is_maximum_matching(head), "f={f}");
        }
    }

    #[test]
    fn seeded_start_is_reproducible() {
        let a = ldf_order(7, LdfStart::Seeded(11)).unwrap();
        assert_eq!(a, ldf_order(7, LdfStart::Seeded(11)).unwrap());
    }

    #[test]
    fn inner_edges_on_the_six_cycle() {
        let g = Graph::cycle(6).unwrap();
        let partial: Vec<Edge> = g.edge_set().iter().collect();
        let order = order_inner_edges(&g, &partial).unwrap();
        assert_eq!(order.edges()[6], e(1, 4));
        assert!([e(2, 5), e(3, 6)].contains(&order.edges()[7]));
    }

    #[test]
    fn terminal_pair_is_lexicographic() {
        let g = Graph::from_edges(4, [e(1, 2), e(1, 4), e(2, 3), e(3, 4)]).unwrap();
        let partial: Vec<Edge> = g.edge_set().iter().collect();
        let order = order_inner_edges(&g, &partial).unwrap();
        assert_eq!(&order.edges()[4..], &[e(1, 3), e(2, 4)]);
        assert_eq!(
            order_inner_edges(&Graph::complete(4).unwrap(), &[]),
            Err(Error::GraphComplete)
        );
    }
}
