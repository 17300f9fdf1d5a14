//! Frame-matroid analysis: circuits, rank, quasibalance, connectivity.
//!
//! The seven-vertex graph here carries two negative cycles meeting in one
//! vertex, so it is not quasibalanced; removing its one redundant edge
//! restores quasibalance without changing the rank.
//!
//! Run with: cargo run --example matroid_analysis

use std::collections::BTreeSet;

use bidigraph::matroid::matroid_report;
use bidigraph::reduction::transitive_reduction;
use bidigraph::{BidirectedGraph, EdgeId};

fn names(g: &BidirectedGraph, set: &BTreeSet<EdgeId>) -> String {
    set.iter()
        .map(|e| g.edge(*e).id.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let g = BidirectedGraph::from_parts(
        &["1", "2", "3", "4", "5", "6", "7"],
        &[
            ("e", "1", '-', "2", '+'),
            ("e2", "2", '+', "3", '+'),
            ("e3", "3", '+', "4", '+'),
            ("e4", "4", '+', "5", '+'),
            ("e5", "1", '-', "5", '+'),
            ("e6", "5", '-', "6", '+'),
            ("e7", "6", '-', "7", '+'),
            ("e8", "5", '+', "7", '+'),
            ("e9", "7", '-', "2", '+'),
        ],
    )
    .unwrap();

    let report = matroid_report(&g, 10_000).unwrap();
    println!(
        "rank {} = {} vertices - {} balanced components",
        report.rank,
        g.vertex_count(),
        report.balanced_components
    );
    println!("quasibalanced: {}", report.quasibalanced);
    println!("matroid connected: {:?}", report.connected);
    println!("circuits:");
    for (set, ty) in &report.circuits.circuits {
        println!("  type {:>3}: {}", ty.tag(), names(&g, set));
    }

    // The reduction drops the one redundant edge and becomes quasibalanced,
    // at the same rank.
    let reduced = transitive_reduction(&g, None).unwrap().graph;
    let after = matroid_report(&reduced, 10_000).unwrap();
    println!(
        "\nafter reduction: rank {}, quasibalanced {}",
        after.rank, after.quasibalanced
    );
}
