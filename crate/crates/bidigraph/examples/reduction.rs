//! Transitive reduction: ordered elimination, uniqueness, and the
//! order-dependent case.
//!
//! Run with: cargo run --example reduction

use bidigraph::closure::transitive_closure;
use bidigraph::reduction::{all_reductions, redundant_edges, transitive_reduction};
use bidigraph::state::has_bcircuit;
use bidigraph::BidirectedGraph;

fn main() {
    // A balanced triangle: e3 is implied by the b-path through e1, e2.
    let triangle = BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("e1", "2", '-', "1", '-'),
            ("e2", "1", '+', "3", '-'),
            ("e3", "2", '-', "3", '-'),
        ],
    )
    .unwrap();

    let r = transitive_reduction(&triangle, None).unwrap();
    for (e, witness) in &r.removed {
        let vertices: Vec<&str> = witness
            .vertices()
            .iter()
            .map(|v| triangle.vertex_name(*v))
            .collect();
        println!(
            "triangle: removed {} (implied through {})",
            triangle.edge(*e).id,
            vertices.join(" ")
        );
    }

    // Without a b-circuit the reduction is unique and order-independent.
    println!("triangle has b-circuit: {}", has_bcircuit(&triangle));
    let redundant = redundant_edges(&triangle).unwrap();
    println!(
        "redundant edges: {:?}",
        redundant
            .iter()
            .map(|e| triangle.edge(*e).id.as_str())
            .collect::<Vec<_>>()
    );

    // A b-circuit plus the chord it implies: the chord goes, the circuit
    // stays. The *closure* of this graph has several reductions.
    let chord = BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("f1", "2", '+', "3", '+'),
            ("f2", "1", '+', "3", '-'),
            ("f3", "2", '-', "1", '-'),
            ("g", "2", '+', "1", '+'),
        ],
    )
    .unwrap();
    let r = transitive_reduction(&chord, None).unwrap();
    println!(
        "\nchord graph reduces to: {:?}",
        r.graph.edges().iter().map(|e| e.id.as_str()).collect::<Vec<_>>()
    );

    let closed = transitive_closure(&chord).graph;
    let reductions = all_reductions(&closed, None).unwrap();
    println!("its closure has {} distinct reductions:", reductions.len());
    for set in &reductions {
        let names: Vec<&str> = set.iter().map(|e| closed.edge(*e).id.as_str()).collect();
        println!("  {}", names.join(" "));
    }
}
