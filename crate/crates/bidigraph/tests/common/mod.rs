//! Fixture graphs shared by the integration suites.
#![allow(dead_code)]

use bidigraph::BidirectedGraph;

/// Three-edge all-negative path x - a - b - y; its closure adds exactly
/// three edges.
pub fn path3() -> BidirectedGraph {
    BidirectedGraph::from_parts(
        &["x", "a", "b", "y"],
        &[
            ("e1", "x", '-', "a", '-'),
            ("e2", "a", '+', "b", '+'),
            ("e3", "b", '-', "y", '-'),
        ],
    )
    .unwrap()
}

/// Balanced triangle in which e3 is implied by e1, e2.
pub fn triangle() -> BidirectedGraph {
    BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("e1", "2", '-', "1", '-'),
            ("e2", "1", '+', "3", '-'),
            ("e3", "2", '-', "3", '-'),
        ],
    )
    .unwrap()
}

/// A b-circuit f1 f2 f3 plus the chord g it implies; the closure of this
/// graph has two distinct reductions.
pub fn circuit_chord() -> BidirectedGraph {
    BidirectedGraph::from_parts(
        &["1", "2", "3"],
        &[
            ("f1", "2", '+', "3", '+'),
            ("f2", "1", '+', "3", '-'),
            ("f3", "2", '-', "1", '-'),
            ("g", "2", '+', "1", '+'),
        ],
    )
    .unwrap()
}

/// Seven vertices, nine edges: two negative cycles share vertex 5, edge `e`
/// is removable through 1 5 6 7 2, and dropping `e` restores quasibalance.
pub fn pentagon_triangle() -> BidirectedGraph {
    BidirectedGraph::from_parts(
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
    .unwrap()
}
