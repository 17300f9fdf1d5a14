//! Property-based invariants over arbitrary small graphs, including
//! duplicate-identity multigraphs the seeded generator avoids.

mod common;

use std::collections::BTreeSet;

use bidigraph::closure::{closure_keys, relative_closure, transitive_closure};
use bidigraph::format::{parse_bdg, serialize_bdg};
use bidigraph::reduction::transitive_reduction;
use bidigraph::state::{is_bpath, StateDigraph};
use bidigraph::{BidirectedGraph, EdgeId, Sign, SignedVertex, VertexId};
use proptest::prelude::*;

#[derive(Clone, Debug)]
struct RawGraph {
    vertices: usize,
    edges: Vec<(usize, usize, bool, bool)>,
}

fn arb_graph() -> impl Strategy<Value = RawGraph> {
    (1usize..=6).prop_flat_map(|n| {
        let edge = (0..n, 0..n, any::<bool>(), any::<bool>());
        proptest::collection::vec(edge, 0..=8)
            .prop_map(move |edges| RawGraph { vertices: n, edges })
    })
}

fn build(raw: &RawGraph) -> BidirectedGraph {
    let mut b = BidirectedGraph::builder();
    for v in 0..raw.vertices {
        b.vertex(format!("v{v}"));
    }
    let sign = |x: bool| if x { Sign::Plus } else { Sign::Minus };
    for (i, (u, v, su, sv)) in raw.edges.iter().enumerate() {
        b.edge(
            format!("e{i}"),
            format!("v{u}"),
            sign(*su),
            format!("v{v}"),
            sign(*sv),
        );
    }
    b.build().unwrap()
}

fn vertex_subset(g: &BidirectedGraph, mask: u32) -> BTreeSet<VertexId> {
    g.vertex_ids().filter(|v| mask & (1 << v.0) != 0).collect()
}

proptest! {
    /// sigma and the edge weight determine each other the expected way.
    #[test]
    fn signature_weight_consistency(raw in arb_graph()) {
        let g = build(&raw);
        for e in g.edges() {
            prop_assert!(matches!(e.weight(), -2 | 0 | 2));
            prop_assert_eq!(e.signature() == Sign::Plus, e.weight() == 0);
        }
    }

    /// Vertex weights and edge weights sum to the same total.
    #[test]
    fn handshake(raw in arb_graph()) {
        let g = build(&raw);
        let by_vertex: i32 = g.vertex_ids().map(|v| g.vertex_weight(v)).sum();
        let by_edge: i32 = g.edges().iter().map(|e| e.weight()).sum();
        prop_assert_eq!(by_vertex, by_edge);
    }

    /// Switching is an involution, preserves balance, and balanced graphs
    /// switch to all positive.
    #[test]
    fn switching_laws(raw in arb_graph(), mask in any::<u32>()) {
        let g = build(&raw);
        let x = vertex_subset(&g, mask);
        let s = g.switch(&x);
        prop_assert_eq!(s.switch(&x), g.clone());
        prop_assert_eq!(s.is_balanced(), g.is_balanced());
        match g.balancing_switch_set() {
            Some(set) => prop_assert!(g.switch(&set).is_all_positive()),
            None => prop_assert!(!g.is_balanced()),
        }
    }

    /// Antibalance is balance of the sign-negated graph.
    #[test]
    fn antibalance_is_negated_balance(raw in arb_graph()) {
        let g = build(&raw);
        prop_assert_eq!(g.is_antibalanced(), g.negated().is_balanced());
    }

    /// Every found b-path reverses into a b-path with swapped ends.
    #[test]
    fn bpath_reversal(raw in arb_graph()) {
        let g = build(&raw);
        let sd = StateDigraph::new(&g);
        for x in g.vertex_ids() {
            for sx in [Sign::Minus, Sign::Plus] {
                for y in g.vertex_ids() {
                    for sy in [Sign::Minus, Sign::Plus] {
                        let from = SignedVertex::new(x, sx);
                        let to = SignedVertex::new(y, sy);
                        if let Some(p) = sd.find_bpath(from, to) {
                            let rev = p.reversed(&g);
                            prop_assert_eq!(rev.start(), to);
                            prop_assert_eq!(rev.end(), from);
                            prop_assert!(is_bpath(&g, rev.chain()).unwrap());
                        }
                    }
                }
            }
        }
    }

    /// Closure is extensive and idempotent, and each added edge conserves
    /// the witness walk's sign and weight.
    #[test]
    fn closure_laws(raw in arb_graph()) {
        let g = build(&raw);
        let c = transitive_closure(&g);
        let keys = closure_keys(&g);
        prop_assert!(keys.is_superset(&g.edge_keys()));
        prop_assert_eq!(closure_keys(&c.graph), keys);
        for (k, w) in &c.added {
            prop_assert_eq!(w.weight(), k.first().sign.value() + k.second().sign.value());
            prop_assert_eq!(w.sign(), (k.first().sign * k.second().sign).flip());
        }
        // Positivity and balance are preserved by closure.
        if g.is_all_positive() {
            prop_assert!(c.graph.is_all_positive());
        }
        if g.is_balanced() {
            prop_assert!(c.graph.is_balanced());
        }
    }

    /// The reduction regenerates the graph and keeps closure, balance,
    /// positivity and components intact.
    #[test]
    fn reduction_laws(raw in arb_graph()) {
        let g = build(&raw);
        let r = transitive_reduction(&g, None).unwrap();
        prop_assert_eq!(relative_closure(&g, &r.graph).unwrap(), g.clone());
        prop_assert_eq!(closure_keys(&r.graph), closure_keys(&g));
        prop_assert_eq!(r.graph.is_balanced(), g.is_balanced());
        prop_assert_eq!(r.graph.is_all_positive(), g.is_all_positive());
        prop_assert_eq!(r.graph.components(), g.components());
    }

    /// Shuffled elimination orders still generate the graph.
    #[test]
    fn any_order_generates(raw in arb_graph(), seed in any::<u64>()) {
        let g = build(&raw);
        let mut order: Vec<EdgeId> = g.edge_ids().collect();
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let r = transitive_reduction(&g, Some(&order)).unwrap();
        prop_assert_eq!(relative_closure(&g, &r.graph).unwrap(), g);
    }

    /// Text round trip: parse after serialize is the identity, and the
    /// serialized form is a fixed point.
    #[test]
    fn bdg_round_trip(raw in arb_graph()) {
        let g = build(&raw);
        let text = serialize_bdg(&g);
        let back = parse_bdg(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_bdg(&back), text);
    }
}

#[test]
fn positive_cycle_rigidity() {
    // A b-path whose edge set contains a positive cycle is that cycle.
    let suite = [common::triangle(), common::circuit_chord(), common::pentagon_triangle()];
    for g in &suite {
        let cycles = bidigraph::matroid::elementary_cycles(g, None, 10_000).unwrap();
        let positive: Vec<BTreeSet<EdgeId>> = cycles
            .iter()
            .filter(|c| c.sign(g) == Sign::Plus)
            .map(|c| c.edge_set())
            .collect();
        let sd = StateDigraph::new(g);
        for x in g.vertex_ids() {
            for sx in [Sign::Minus, Sign::Plus] {
                for y in g.vertex_ids() {
                    for sy in [Sign::Minus, Sign::Plus] {
                        let paths = sd
                            .enumerate_bpaths(
                                SignedVertex::new(x, sx),
                                SignedVertex::new(y, sy),
                                10_000,
                            )
                            .unwrap();
                        for p in paths {
                            let edges: BTreeSet<EdgeId> =
                                p.steps().iter().map(|s| s.edge).collect();
                            for cycle in &positive {
                                if cycle.is_subset(&edges) {
                                    assert_eq!(&edges, cycle, "b-path equals its positive cycle");
                                    assert_eq!(p.len(), cycle.len());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
