//! Transitive closure and transitive reduction for bidirected graphs.
//!
//! A bidirected graph gives every edge end its own sign, generalizing
//! directed graphs (which are the all-positive case). This crate implements
//! the calculus that makes reachability work in that setting:
//!
//! - [`graph`] — the data model: signed half-edges, switching, balance and
//!   antibalance;
//! - [`state`] — the derived state digraph on (vertex, departure-sign) pairs,
//!   b-walks, b-paths, b-circuits and cyclic-b-path classification;
//! - [`closure`] — the transitive closure operator and relative closure;
//! - [`reduction`] — ordered-elimination transitive reduction, redundant
//!   edges, and the closure/reduction duality;
//! - [`matroid`] — the frame matroid of the induced signed graph: circuit
//!   classification, rank, quasibalance, matroid connectivity;
//! - [`oracle`] — independent brute-force reference implementations used to
//!   validate the engine on small instances;
//! - [`format`](crate::format) — the `.bdg` text format and DOT export;
//! - [`cli`] — the `bdg` command-line tool.
//!
//! Everything is built around immutable values and pure functions, so graphs
//! and derived structures can be shared across threads freely. All outputs
//! are deterministic: ties are broken by declaration order throughout.
//!
//! The `examples/` directory contains one runnable program per capability;
//! start with `cargo run --example closure`.

pub mod cli;
pub mod closure;
pub mod format;
pub mod graph;
pub mod matroid;
pub mod oracle;
pub mod reduction;
pub mod state;

pub use graph::{
    BidirectedGraph, Edge, EdgeId, GraphBuilder, GraphError, Sign, SignedEdgeKey, SignedVertex,
    VertexId,
};
pub use state::{BPath, BWalk, Chain, CyclicClass, Direction, State, StateDigraph, Step};
