//! DOT export with closure/reduction styling, ready for Graphviz.
//!
//! Run with: cargo run --example dot_export | dot -Tsvg > out.svg

use bidigraph::closure::transitive_closure;
use bidigraph::format::{export_dot, DotAnnotations};
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

    let closed = transitive_closure(&g);
    let mut ann = DotAnnotations::default();
    for e in closed.graph.edge_ids() {
        if closed.graph.edge(e).id.starts_with("ft:") {
            ann.added.insert(e);
        }
    }
    print!("{}", export_dot(&closed.graph, &ann));
}
