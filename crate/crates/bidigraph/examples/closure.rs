//! Transitive closure of a bidirected graph.
//!
//! Builds the three-edge path whose closure adds three edges, prints the
//! added edge types with their witness b-paths, and shows that closing a
//! second time changes nothing.
//!
//! Run with: cargo run --example closure

use bidigraph::closure::{is_transitive, transitive_closure};
use bidigraph::format::serialize_bdg;
use bidigraph::BidirectedGraph;

fn main() {
    let g = BidirectedGraph::from_parts(
        &["x", "a", "b", "y"],
        &[
            ("e1", "x", '-', "a", '-'),
            ("e2", "a", '+', "b", '+'),
            ("e3", "b", '-', "y", '-'),
        ],
    )
    .unwrap();

    println!("input:\n{}", serialize_bdg(&g));
    println!("transitive: {}", is_transitive(&g));

    let closed = transitive_closure(&g);
    println!("\nadded {} edge(s):", closed.added.len());
    for (key, witness) in &closed.added {
        let vertices: Vec<&str> = witness
            .vertices()
            .iter()
            .map(|v| g.vertex_name(*v))
            .collect();
        println!(
            "  {}  via b-path {}  (sign {}, weight {:+})",
            g.display_key(*key),
            vertices.join(" "),
            witness.sign(),
            witness.weight()
        );
    }

    println!("\nclosure:\n{}", serialize_bdg(&closed.graph));
    println!("closure is transitive: {}", is_transitive(&closed.graph));
}
