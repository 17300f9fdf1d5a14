//! The transitive closure operator and relative closure.
//!
//! The closure of a bidirected graph contains the edge type `{x^a, y^b}`
//! whenever some b-path runs from `x^a` to `y^b`. On the state digraph this
//! is reachability by at least one arc, so the whole closure comes out of
//! `2|V|` breadth-first searches. Closure is an abstract closure operator:
//! extensive, monotone and idempotent on edge-key sets.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{BidirectedGraph, EdgeId, SignedEdgeKey, SignedVertex};
use crate::state::{BPath, StateDigraph};

/// Result of taking a transitive closure: the closed graph (original edges
/// followed by one new edge per added key, in key order) plus a witness
/// b-path in the *original* graph for every added key.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub graph: BidirectedGraph,
    pub added: BTreeMap<SignedEdgeKey, BPath>,
}

impl ClosureResult {
    pub fn added_keys(&self) -> BTreeSet<SignedEdgeKey> {
        self.added.keys().copied().collect()
    }

    /// All edge keys of the closed graph.
    pub fn key_set(&self) -> BTreeSet<SignedEdgeKey> {
        self.graph.edge_keys()
    }
}

/// The key set of the transitive closure, without materializing witnesses.
pub fn closure_keys(g: &BidirectedGraph) -> BTreeSet<SignedEdgeKey> {
    closure_keys_filtered(g, None)
}

/// Closure keys of the partial graph of `g` consisting of `keep` (all edges
/// when `None`). Keys are expressed over `g`'s vertex ids either way.
pub(crate) fn closure_keys_filtered(
    g: &BidirectedGraph,
    keep: Option<&BTreeSet<EdgeId>>,
) -> BTreeSet<SignedEdgeKey> {
    let sd = match keep {
        None => StateDigraph::new(g),
        Some(keep) => StateDigraph::with_filter(g, |e| keep.contains(&e)),
    };
    let mut keys = BTreeSet::new();
    for v in g.vertex_ids() {
        for sign in [crate::graph::Sign::Minus, crate::graph::Sign::Plus] {
            let from = SignedVertex::new(v, sign);
            for state in sd.reachable(from) {
                keys.insert(SignedEdgeKey::new(
                    from,
                    SignedVertex::new(state.vertex, state.dep.flip()),
                ));
            }
        }
    }
    keys
}

/// The transitive closure. Every reachable state pair contributes its key;
/// keys already realized by an existing edge are not duplicated, and each
/// added key gets exactly one new edge named `ft:<end>:<end>`.
///
/// Added loops arise from b-paths returning to their start vertex, and a
/// b-circuit forces the reversed orientation of every edge on it into the
/// closure.
pub fn transitive_closure(g: &BidirectedGraph) -> ClosureResult {
    let sd = StateDigraph::new(g);
    let existing = g.edge_keys();
    let all = closure_keys(g);
    let mut added = BTreeMap::new();
    for key in all.difference(&existing) {
        let witness = sd
            .find_bpath(key.first(), key.second())
            .expect("reachability produced the key, so a b-path exists");
        added.insert(*key, witness);
    }
    let mut builder = BidirectedGraph::builder();
    for v in g.vertex_ids() {
        builder.vertex(g.vertex_name(v));
    }
    for e in g.edges() {
        builder.edge(
            e.id.clone(),
            g.vertex_name(e.u),
            e.tau_u,
            g.vertex_name(e.v),
            e.tau_v,
        );
    }
    let taken: BTreeSet<&str> = g.edges().iter().map(|e| e.id.as_str()).collect();
    for key in added.keys() {
        let mut id = format!(
            "ft:{}:{}",
            g.display_signed_vertex(key.first()),
            g.display_signed_vertex(key.second())
        );
        while taken.contains(id.as_str()) {
            id.push('\'');
        }
        builder.edge(
            id,
            g.vertex_name(key.first().vertex),
            key.first().sign,
            g.vertex_name(key.second().vertex),
            key.second().sign,
        );
    }
    let graph = builder.build().expect("closure graph is well formed");
    ClosureResult { graph, added }
}

/// A graph is transitive when its closure adds nothing.
pub fn is_transitive(g: &BidirectedGraph) -> bool {
    closure_keys(g) == g.edge_keys()
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PartialGraphError {
    #[error("vertex sets differ")]
    VertexMismatch,
    #[error("edge `{0}` does not appear in the host graph")]
    UnknownEdge(String),
    #[error("edge `{0}` differs from the host graph's edge of the same name")]
    EdgeMismatch(String),
}

/// The relative closure `ft(G; H)` of a partial graph `H` inside `G`: the
/// partial graph of `G` whose edges are those whose key lies in the closure
/// of `H`. Equals the intersection of the full closure of `H` with `G`.
pub fn relative_closure(
    g: &BidirectedGraph,
    h: &BidirectedGraph,
) -> Result<BidirectedGraph, PartialGraphError> {
    let ids = partial_graph_ids(g, h)?;
    let keys = closure_keys_filtered(g, Some(&ids));
    let keep: BTreeSet<EdgeId> = g
        .edge_ids()
        .filter(|&e| keys.contains(&g.edge(e).key()))
        .collect();
    Ok(g.partial_graph(&keep))
}

/// Check that `h` is a partial graph of `g` and return its edges as `g` ids.
pub(crate) fn partial_graph_ids(
    g: &BidirectedGraph,
    h: &BidirectedGraph,
) -> Result<BTreeSet<EdgeId>, PartialGraphError> {
    if g.vertex_ids().count() != h.vertex_ids().count()
        || g.vertex_ids().any(|v| g.vertex_name(v) != h.vertex_name(v))
    {
        return Err(PartialGraphError::VertexMismatch);
    }
    let mut ids = BTreeSet::new();
    for e in h.edges() {
        let id = g
            .edge_id(&e.id)
            .ok_or_else(|| PartialGraphError::UnknownEdge(e.id.clone()))?;
        if g.edge(id) != e {
            return Err(PartialGraphError::EdgeMismatch(e.id.clone()));
        }
        ids.insert(id);
    }
    Ok(ids)
}
