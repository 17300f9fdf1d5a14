//! Balance, switching, and antibalance.
//!
//! Run with: cargo run --example balance_switching

use bidigraph::format::serialize_bdg;
use bidigraph::BidirectedGraph;

fn main() {
    let g = BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("e1", "2", '-', "1", '-'),
            ("e2", "1", '+', "3", '-'),
            ("e3", "2", '-', "3", '-'),
        ],
    )
    .unwrap();

    println!("balanced: {}", g.is_balanced());
    let x = g.balancing_switch_set().unwrap();
    let names: Vec<&str> = x.iter().map(|v| g.vertex_name(*v)).collect();
    println!("switching {{{}}} makes every edge positive:", names.join(", "));
    let switched = g.switch(&x);
    print!("{}", serialize_bdg(&switched));
    println!("all positive: {}", switched.is_all_positive());

    // Switching never changes balance, and it is an involution.
    assert_eq!(switched.switch(&x), g);

    // A single negative loop is an unbalanced cycle of length one.
    let loopy = BidirectedGraph::from_parts(&["x"], &[("l", "x", '+', "x", '+')]).unwrap();
    println!("\nnegative loop balanced: {}", loopy.is_balanced());

    // All-negative graphs are antibalanced.
    let path = BidirectedGraph::from_parts(
        &["x", "a", "b", "y"],
        &[
            ("e1", "x", '-', "a", '-'),
            ("e2", "a", '+', "b", '+'),
            ("e3", "b", '-', "y", '-'),
        ],
    )
    .unwrap();
    println!(
        "\npath: all-negative {}, antibalanced {}",
        path.is_all_negative(),
        path.is_antibalanced()
    );
    let (sources, sinks) = path.sources_and_sinks();
    println!(
        "sources: {:?}, sinks: {:?}",
        sources.iter().map(|v| path.vertex_name(*v)).collect::<Vec<_>>(),
        sinks.iter().map(|v| path.vertex_name(*v)).collect::<Vec<_>>()
    );
}
