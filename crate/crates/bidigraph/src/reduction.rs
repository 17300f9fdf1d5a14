//! Transitive reduction by ordered elimination, and its interplay with
//! closure.
//!
//! A transitive reduction is a minimal partial graph whose relative closure
//! regenerates the whole graph. Scanning the edges in a linear order and
//! deleting each one that is implied by a b-path in the current remainder
//! always produces one; different orders may produce different reductions,
//! but when the graph has no b-circuit the reduction is unique and equals
//! the graph minus its redundant edges.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::closure::{closure_keys_filtered, partial_graph_ids, PartialGraphError};
use crate::graph::{BidirectedGraph, EdgeId, Sign, VertexId};
use crate::state::{has_bcircuit, BPath, StateDigraph};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("ordering is not a permutation of the edge set")]
    InvalidOrdering,
    #[error(transparent)]
    NotPartialGraph(#[from] PartialGraphError),
    #[error("graph has {edges} edges, above the exhaustive bound {bound}; pass a larger cap")]
    TooLarge { edges: usize, bound: usize },
    #[error("reduction not unique; use transitive_reduction with an ordering")]
    HasBCircuit,
}

/// Result of one ordered elimination: the reduced graph, the removed edges
/// with the witness b-path that implied each one (a b-path in the remainder
/// at the moment of removal), and the ordering that was used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub graph: BidirectedGraph,
    pub removed: Vec<(EdgeId, BPath)>,
    pub ordering: Vec<EdgeId>,
}

impl ReductionResult {
    pub fn kept_edges(&self) -> BTreeSet<EdgeId> {
        let removed: BTreeSet<EdgeId> = self.removed.iter().map(|(e, _)| *e).collect();
        (0..self.ordering.len())
            .map(EdgeId)
            .filter(|e| !removed.contains(e))
            .collect()
    }
}

/// Eliminate edges in the given order (declaration order by default). Edge
/// `e = {x^a, y^b}` is removed exactly when the remaining graph minus `e`
/// still has a b-path from `x^a` to `y^b`.
pub fn transitive_reduction(
    g: &BidirectedGraph,
    ordering: Option<&[EdgeId]>,
) -> Result<ReductionResult, ReductionError> {
    let order: Vec<EdgeId> = match ordering {
        None => g.edge_ids().collect(),
        Some(o) => {
            let as_set: BTreeSet<EdgeId> = o.iter().copied().collect();
            if o.len() != g.edge_count()
                || as_set.len() != g.edge_count()
                || as_set.iter().any(|e| e.0 >= g.edge_count())
            {
                return Err(ReductionError::InvalidOrdering);
            }
            o.to_vec()
        }
    };
    let mut removed_set: BTreeSet<EdgeId> = BTreeSet::new();
    let mut removed = Vec::new();
    for &e in &order {
        let mut excluded = removed_set.clone();
        excluded.insert(e);
        let sd = StateDigraph::without_edges(g, &excluded);
        let key = g.edge(e).key();
        if let Some(witness) = sd.find_bpath(key.first(), key.second()) {
            removed_set.insert(e);
            removed.push((e, witness));
        }
    }
    let keep: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !removed_set.contains(e)).collect();
    Ok(ReductionResult {
        graph: g.partial_graph(&keep),
        removed,
        ordering: order,
    })
}

/// Is `h` a transitive reduction of `g`: does its closure cover every key of
/// `g`, and is it minimal with that property? Minimality only needs
/// single-edge deletions because closure is monotone.
pub fn is_transitive_reduction(
    g: &BidirectedGraph,
    h: &BidirectedGraph,
) -> Result<bool, ReductionError> {
    partial_graph_ids(g, h)?;
    let goal = g.edge_keys();
    let all: BTreeSet<EdgeId> = h.edge_ids().collect();
    if !closure_keys_filtered(h, Some(&all)).is_superset(&goal) {
        return Ok(false);
    }
    for e in h.edge_ids() {
        let keep: BTreeSet<EdgeId> = h.edge_ids().filter(|&x| x != e).collect();
        if closure_keys_filtered(h, Some(&keep)).is_superset(&goal) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn generates(g: &BidirectedGraph, keep: &BTreeSet<EdgeId>) -> bool {
    let keys = closure_keys_filtered(g, Some(keep));
    g.edges().iter().all(|e| keys.contains(&e.key()))
}

/// All distinct transitive reductions, as kept-edge-id sets. These are
/// exactly the minimal generating partial graphs, equivalently the outcomes
/// of the ordered elimination over all |E|! orderings.
///
/// Enumeration branches only over the non-mandatory edges (an edge whose key
/// is not implied by the rest of the graph lies in every reduction), pruning
/// supersets of already-found solutions, so the b-circuit-free case costs
/// little more than one closure per edge. The guard bound on |E| is 10
/// unless `cap` raises it.
pub fn all_reductions(
    g: &BidirectedGraph,
    cap: Option<usize>,
) -> Result<BTreeSet<BTreeSet<EdgeId>>, ReductionError> {
    let bound = cap.unwrap_or(10);
    let m = g.edge_count();
    if m > bound || m > 63 {
        return Err(ReductionError::TooLarge {
            edges: m,
            bound: bound.min(63),
        });
    }
    let mut mandatory: BTreeSet<EdgeId> = BTreeSet::new();
    let mut optional: Vec<EdgeId> = Vec::new();
    for e in g.edge_ids() {
        let without: BTreeSet<EdgeId> = g.edge_ids().filter(|&x| x != e).collect();
        if generates(g, &without) {
            optional.push(e);
        } else {
            mandatory.insert(e);
        }
    }
    let k = optional.len();
    let mut results: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut found_masks: Vec<u64> = Vec::new();
    for size in 0..=k {
        for mask in masks_of_size(k, size) {
            if found_masks.iter().any(|&f| f | mask == mask) {
                continue;
            }
            let mut keep = mandatory.clone();
            for (i, &e) in optional.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    keep.insert(e);
                }
            }
            if generates(g, &keep) {
                found_masks.push(mask);
                results.insert(keep);
            }
        }
    }
    Ok(results)
}

fn masks_of_size(k: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(k: usize, size: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<u64>) {
        if pick.len() == size {
            out.push(pick.iter().fold(0u64, |m, &i| m | (1 << i)));
            return;
        }
        for i in start..k {
            pick.push(i);
            rec(k, size, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(k, size, 0, &mut pick, &mut out);
    out
}

/// The redundant edges of a b-circuit-free graph: those implied by a b-path
/// avoiding them. In that regime removal is order-independent and the unique
/// transitive reduction is the graph minus this set. Graphs with a b-circuit
/// are rejected, since their reduction need not be unique.
pub fn redundant_edges(g: &BidirectedGraph) -> Result<BTreeSet<EdgeId>, ReductionError> {
    if has_bcircuit(g) {
        return Err(ReductionError::HasBCircuit);
    }
    let mut out = BTreeSet::new();
    for e in g.edge_ids() {
        let excluded = BTreeSet::from([e]);
        let sd = StateDigraph::without_edges(g, &excluded);
        let key = g.edge(e).key();
        if sd.exists_bwalk(key.first(), key.second()) {
            out.insert(e);
        }
    }
    Ok(out)
}

/// Source/sink structure of a graph with no b-path longer than one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceSinkProfile {
    pub sources: BTreeSet<VertexId>,
    pub sinks: BTreeSet<VertexId>,
    pub antibalanced: bool,
}

/// When `g` has no positive loop and no b-path of length greater than one,
/// every vertex is a source or a sink, edges between the two classes are
/// positive, edges within a class are negative, and the graph is
/// antibalanced; such graphs equal their own reduction. Returns `None` when
/// the hypothesis fails.
pub fn no_long_bpath_profile(g: &BidirectedGraph) -> Option<SourceSinkProfile> {
    if g.edges()
        .iter()
        .any(|e| e.is_loop() && e.signature() == Sign::Plus)
    {
        return None;
    }
    let sd = StateDigraph::new(g);
    let mut has_out = vec![false; sd.node_count()];
    for arc in sd.arcs() {
        has_out[arc.from.index()] = true;
    }
    for arc in sd.arcs() {
        if has_out[arc.to.index()] {
            return None;
        }
    }
    let (sources, sinks) = g.sources_and_sinks();
    debug_assert!(g
        .vertex_ids()
        .all(|v| sources.contains(&v) || sinks.contains(&v)));
    Some(SourceSinkProfile {
        sources,
        sinks,
        antibalanced: g.is_antibalanced(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{relative_closure, transitive_closure};
    use crate::state::Chain;

    fn path_fixture() -> BidirectedGraph {
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

    fn triangle_fixture() -> BidirectedGraph {
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

    fn chord_fixture() -> BidirectedGraph {
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

    fn seven_fixture() -> BidirectedGraph {
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

    #[test]
    fn triangle_reduction_removes_the_redundant_edge() {
        let t = triangle_fixture();
        let r = transitive_reduction(&t, None).unwrap();
        assert_eq!(r.removed.len(), 1);
        let (e, witness) = &r.removed[0];
        assert_eq!(*e, t.edge_id("e3").unwrap());
        let expected = Chain::through(&t, "2", &["e1", "e2"]).unwrap();
        assert_eq!(witness.chain(), &expected);
        assert_eq!(r.graph.edge_count(), 2);
    }

    #[test]
    fn chord_fixture_reduces_to_the_circuit() {
        let g = chord_fixture();
        let r = transitive_reduction(&g, None).unwrap();
        let removed: Vec<_> = r.removed.iter().map(|(e, _)| *e).collect();
        assert_eq!(removed, vec![g.edge_id("g").unwrap()]);
        let names: Vec<_> = r.graph.edges().iter().map(|e| e.id.as_str()).collect();
        assert_eq!(names, vec!["f1", "f2", "f3"]);
    }

    #[test]
    fn seven_vertex_graph_removes_exactly_the_first_edge() {
        let g = seven_fixture();
        let r = transitive_reduction(&g, None).unwrap();
        let removed: Vec<_> = r.removed.iter().map(|(e, _)| *e).collect();
        assert_eq!(removed, vec![g.edge_id("e").unwrap()]);
        // Witness path 1 5 6 7 2.
        let expected = Chain::through(&g, "1", &["e5", "e6", "e7", "e9"]).unwrap();
        assert_eq!(r.removed[0].1.chain(), &expected);
        // Relative closure of the reduction regenerates the graph.
        assert_eq!(relative_closure(&g, &r.graph).unwrap(), g);
    }

    #[test]
    fn is_transitive_reduction_examples() {
        let t = triangle_fixture();
        let keep = BTreeSet::from([t.edge_id("e1").unwrap(), t.edge_id("e2").unwrap()]);
        let h = t.partial_graph(&keep);
        assert!(is_transitive_reduction(&t, &h).unwrap());
        assert!(!is_transitive_reduction(&t, &t).unwrap());

        let p = path_fixture();
        assert!(is_transitive_reduction(&p, &p).unwrap());
    }

    #[test]
    fn all_reductions_examples() {
        let t = triangle_fixture();
        let r = all_reductions(&t, None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(
            r.iter().next().unwrap(),
            &BTreeSet::from([t.edge_id("e1").unwrap(), t.edge_id("e2").unwrap()])
        );

        let single = BidirectedGraph::from_parts(&["x", "y"], &[("e", "x", '+', "y", '-')])
            .unwrap();
        let r = all_reductions(&single, None).unwrap();
        assert_eq!(r, BTreeSet::from([BTreeSet::from([EdgeId(0)])]));
    }

    #[test]
    fn closure_of_chord_fixture_has_two_reductions() {
        let g = chord_fixture();
        let closed = transitive_closure(&g).graph;
        let reductions = all_reductions(&closed, None).unwrap();
        let by_names: BTreeSet<BTreeSet<&str>> = reductions
            .iter()
            .map(|set| {
                set.iter()
                    .map(|e| closed.edge(*e).id.as_str())
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        assert!(by_names.contains(&BTreeSet::from(["f1", "f2", "f3"])));
        assert!(by_names.contains(&BTreeSet::from(["g", "ft:1-:3+", "ft:2-:3-"])));
    }

    #[test]
    fn redundant_edges_examples() {
        let t = triangle_fixture();
        assert_eq!(
            redundant_edges(&t).unwrap(),
            BTreeSet::from([t.edge_id("e3").unwrap()])
        );
        assert!(redundant_edges(&path_fixture()).unwrap().is_empty());
        let g = seven_fixture();
        assert_eq!(
            redundant_edges(&g).unwrap(),
            BTreeSet::from([g.edge_id("e").unwrap()])
        );
        assert_eq!(redundant_edges(&chord_fixture()), Err(ReductionError::HasBCircuit));
    }

    #[test]
    fn ordering_validation() {
        let t = triangle_fixture();
        assert_eq!(
            transitive_reduction(&t, Some(&[EdgeId(0), EdgeId(1)])),
            Err(ReductionError::InvalidOrdering)
        );
        assert_eq!(
            transitive_reduction(&t, Some(&[EdgeId(0), EdgeId(0), EdgeId(1)])),
            Err(ReductionError::InvalidOrdering)
        );
        // Any permutation of the triangle yields the same (unique) reduction.
        let orders = [
            [EdgeId(0), EdgeId(1), EdgeId(2)],
            [EdgeId(2), EdgeId(1), EdgeId(0)],
            [EdgeId(1), EdgeId(2), EdgeId(0)],
        ];
        for o in orders {
            let r = transitive_reduction(&t, Some(&o)).unwrap();
            assert_eq!(r.kept_edges(), BTreeSet::from([EdgeId(0), EdgeId(1)]));
        }
    }

    #[test]
    fn generating_and_duality_on_fixtures() {
        for g in [path_fixture(), triangle_fixture(), chord_fixture(), seven_fixture()] {
            let r = transitive_reduction(&g, None).unwrap();
            assert_eq!(relative_closure(&g, &r.graph).unwrap(), g);
            assert_eq!(
                crate::closure::closure_keys(&r.graph),
                crate::closure::closure_keys(&g)
            );
            assert_eq!(r.graph.is_balanced(), g.is_balanced());
            assert_eq!(r.graph.is_all_positive(), g.is_all_positive());
            let (comp_g, n_g) = g.components();
            let (comp_r, n_r) = r.graph.components();
            assert_eq!((comp_g, n_g), (comp_r, n_r));
        }
    }

    #[test]
    fn no_long_bpath_profile_examples() {
        let single =
            BidirectedGraph::from_parts(&["x", "y"], &[("e", "x", '+', "y", '-')]).unwrap();
        let p = no_long_bpath_profile(&single).unwrap();
        assert_eq!(p.sources, BTreeSet::from([VertexId(0)]));
        assert_eq!(p.sinks, BTreeSet::from([VertexId(1)]));
        assert!(p.antibalanced);
        assert_eq!(single.edge(EdgeId(0)).signature(), Sign::Plus);

        let star = BidirectedGraph::from_parts(
            &["x", "y", "z"],
            &[("a", "x", '+', "y", '+'), ("b", "x", '+', "z", '+')],
        )
        .unwrap();
        let p = no_long_bpath_profile(&star).unwrap();
        assert_eq!(p.sources.len(), 3);
        assert!(p.sinks.is_empty());
        assert!(p.antibalanced);
        assert!(star.edges().iter().all(|e| e.signature() == Sign::Minus));
        // Such graphs are their own unique reduction.
        let r = transitive_reduction(&star, None).unwrap();
        assert!(r.removed.is_empty());

        assert_eq!(no_long_bpath_profile(&path_fixture()), None);
    }
}
