//! B-paths, b-circuits, and the state digraph that hosts them.
//!
//! Run with: cargo run --example bpaths

use bidigraph::state::{classify_cyclic_bpath, find_bcircuit, has_bcircuit, StateDigraph};
use bidigraph::{BidirectedGraph, Sign, SignedVertex};

fn show(g: &BidirectedGraph, walk: &bidigraph::BWalk) -> String {
    let vertices: Vec<&str> = walk.vertices().iter().map(|v| g.vertex_name(*v)).collect();
    format!(
        "{}{} .. {}{} through {}",
        g.vertex_name(walk.start().vertex),
        walk.start().sign,
        g.vertex_name(walk.end().vertex),
        walk.end().sign,
        vertices.join(" ")
    )
}

fn main() {
    let g = BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("f1", "2", '+', "3", '+'),
            ("f2", "1", '+', "3", '-'),
            ("f3", "2", '-', "1", '-'),
            ("g", "2", '+', "1", '+'),
        ],
    )
    .unwrap();

    let sd = StateDigraph::new(&g);
    println!(
        "state digraph: {} states, {} arcs",
        sd.node_count(),
        sd.arc_count()
    );

    // Traversal must alternate half-edge signs, so each query fixes a
    // departure sign and an arrival sign.
    let two_plus = SignedVertex::new(g.vertex_id("2").unwrap(), Sign::Plus);
    let two_minus = SignedVertex::new(g.vertex_id("2").unwrap(), Sign::Minus);
    println!(
        "b-walk from 2+ back to 2-: {}",
        sd.exists_bwalk(two_plus, two_minus)
    );

    // All b-paths between those ends; these are b-circuits, and both the
    // digon and the triangle qualify.
    for p in sd.enumerate_bpaths(two_plus, two_minus, 100).unwrap() {
        println!(
            "  b-circuit of length {}: {} [{:?}]",
            p.len(),
            show(&g, &p),
            classify_cyclic_bpath(&g, &p)
        );
    }

    println!("graph has a b-circuit: {}", has_bcircuit(&g));
    let witness = find_bcircuit(&g).unwrap();
    println!("shortest b-circuit: {}", show(&g, &witness));

    // A graph whose state digraph is acyclic has none.
    let path = BidirectedGraph::from_parts(
        &["x", "a", "b", "y"],
        &[
            ("e1", "x", '-', "a", '-'),
            ("e2", "a", '+', "b", '+'),
            ("e3", "b", '-', "y", '-'),
        ],
    )
    .unwrap();
    println!("\npath has a b-circuit: {}", has_bcircuit(&path));
    let sd = StateDigraph::new(&path);
    let from = SignedVertex::new(path.vertex_id("x").unwrap(), Sign::Minus);
    let to = SignedVertex::new(path.vertex_id("y").unwrap(), Sign::Minus);
    let p = sd.find_bpath(from, to).unwrap();
    println!(
        "b-path x- .. y-: {} (sign {}, weight {:+})",
        show(&path, &p),
        p.sign(),
        p.weight()
    );
}
