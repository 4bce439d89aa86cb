//! Graph representation, serialization and induced-subgraph machinery.

mod common;

use chordalsep::graph::{parse_graph6, to_graph6, Graph, VertexSet};
use common::{gem, graph_from_bits, hajos, reference_graph6, two_p3};
use proptest::prelude::*;

#[test]
fn frozen_graph6_examples_match_the_reference_encoder() {
    // K4: all six pair bits set.
    assert_eq!(reference_graph6(4, &[true; 6]), "C~");
    assert_eq!(to_graph6(&common::complete(4)).unwrap(), "C~");
    assert_eq!(parse_graph6("C~").unwrap(), common::complete(4));

    // P4 0-1-2-3: pairs (0,1),(1,2),(2,3) set in column order.
    let p4_bits = [true, false, true, false, false, true];
    assert_eq!(reference_graph6(4, &p4_bits), "Ch");
    assert_eq!(to_graph6(&common::p4()).unwrap(), "Ch");
    assert_eq!(parse_graph6("Ch").unwrap(), common::p4());

    // Single vertex: size byte only.
    assert_eq!(reference_graph6(1, &[]), "@");
    assert_eq!(parse_graph6("@").unwrap().n(), 1);
}

#[test]
fn named_graphs_have_frozen_encodings() {
    let frozen = [
        (common::claw(), "Cs"),
        (common::p4(), "Ch"),
        (gem(), "Dh{"),
        (common::dart(), "D}_"),
        (hajos(), "E}h_"),
        (two_p3(), "EgCG"),
        (common::butterfly(), "F|aKG"),
    ];
    for (graph, expected) in frozen {
        let bits: Vec<bool> = (1..graph.n())
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .map(|(u, v)| graph.adjacent(u, v))
            .collect();
        assert_eq!(reference_graph6(graph.n(), &bits), expected);
        assert_eq!(to_graph6(&graph).unwrap(), expected);
        assert_eq!(parse_graph6(expected).unwrap(), graph);
    }
}

#[test]
fn induced_subgraph_examples() {
    // Inducing the gem on its path vertices gives P4.
    let p4_part = gem().induced_subgraph(&VertexSet::new(vec![0, 1, 2, 3])).unwrap();
    assert_eq!(p4_part, common::p4());

    // Inducing on all vertices is the identity.
    let g = hajos();
    assert_eq!(g.induced_subgraph(&VertexSet::full(6)).unwrap(), g);

    // The Hajos triangle induces K3.
    let k3 = hajos().induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
    assert_eq!(k3, common::complete(3));
}

#[test]
fn connected_components_examples() {
    let comps = two_p3().connected_components();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c.len() == 3));

    assert_eq!(common::complete(4).connected_components().len(), 1);

    let comps = Graph::empty(3).connected_components();
    assert_eq!(comps.len(), 3);
    assert!(comps.iter().all(|c| c.len() == 1));
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip_is_identity(g in arbitrary_graph(16)) {
        let encoded = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn production_encoder_matches_reference(g in arbitrary_graph(12)) {
        let bits: Vec<bool> = (1..g.n())
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .map(|(u, v)| g.adjacent(u, v))
            .collect();
        prop_assert_eq!(to_graph6(&g).unwrap(), reference_graph6(g.n(), &bits));
    }

    #[test]
    fn inducing_twice_equals_inducing_the_composition(
        g in arbitrary_graph(9),
        raw_s in proptest::collection::vec(any::<bool>(), 9),
        raw_t in proptest::collection::vec(any::<bool>(), 9),
    ) {
        let s: VertexSet = (0..g.n()).filter(|&v| raw_s[v]).collect();
        let first = g.induced_subgraph(&s).unwrap();
        // A subset of the relabeled subgraph corresponds to a subset of s.
        let t_new: VertexSet = (0..first.n()).filter(|&v| raw_t[v]).collect();
        let t_old: VertexSet = t_new.iter().map(|&v| s.as_slice()[v]).collect();
        let via_two_steps = first.induced_subgraph(&t_new).unwrap();
        let direct = g.induced_subgraph(&t_old).unwrap();
        prop_assert_eq!(via_two_steps, direct);
    }

    #[test]
    fn components_partition_the_graph(g in arbitrary_graph(10)) {
        let comps = g.connected_components();
        // Disjoint and covering.
        let mut seen = vec![false; g.n()];
        for c in &comps {
            for &v in c.iter() {
                prop_assert!(!seen[v], "vertex {} in two components", v);
                seen[v] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        // Internally connected, no edges between parts.
        for c in &comps {
            let sub = g.induced_subgraph(c).unwrap();
            prop_assert!(sub.is_connected());
        }
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                for &u in a.iter() {
                    for &v in b.iter() {
                        prop_assert!(!g.adjacent(u, v));
                    }
                }
            }
        }
    }
}
