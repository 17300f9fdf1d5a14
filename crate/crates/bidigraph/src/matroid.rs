//! The frame matroid of the induced signed graph.
//!
//! The circuits of the matroid come in three shapes: a positive cycle (i),
//! two negative cycles meeting in exactly one vertex (ii, a tight handcuff),
//! and two vertex-disjoint negative cycles joined by an internally disjoint
//! elementary chain (iii, a loose handcuff). The rank is |V| minus the
//! number of balanced connected components; an isolated vertex counts as a
//! balanced component. Everything here works at desk scale: cycle
//! enumeration is exhaustive and capped, never sampled.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{BidirectedGraph, EdgeId, Sign, VertexId};
use crate::state::CapExceeded;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("edge set is not an elementary cycle")]
    NotACycle,
    #[error(transparent)]
    CapExceeded(#[from] CapExceeded),
}

/// An elementary cycle: edges in traversal order plus the vertices they
/// visit. A loop is a cycle of length one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn sign(&self, g: &BidirectedGraph) -> Sign {
        self.edges
            .iter()
            .fold(Sign::Plus, |acc, e| acc * g.edge(*e).signature())
    }
}

/// All elementary cycles of the partial graph spanned by `active` (the whole
/// graph when `None`), loops first, then longer cycles anchored at their
/// smallest vertex. Fails once more than `cap` cycles exist.
pub fn elementary_cycles(
    g: &BidirectedGraph,
    active: Option<&BTreeSet<EdgeId>>,
    cap: usize,
) -> Result<Vec<Cycle>, CapExceeded> {
    let keep = |e: EdgeId| active.is_none_or(|s| s.contains(&e));
    let mut out = Vec::new();
    let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); g.vertex_count()];
    for e in g.edge_ids().filter(|&e| keep(e)) {
        let edge = g.edge(e);
        if edge.is_loop() {
            if out.len() >= cap {
                return Err(CapExceeded { cap });
            }
            out.push(Cycle {
                edges: vec![e],
                vertices: vec![edge.u],
            });
        } else {
            adj[edge.u.0].push((e, edge.v));
            adj[edge.v.0].push((e, edge.u));
        }
    }
    // Cycles of length >= 2, anchored at their minimum vertex; each cycle is
    // found twice (once per orientation), kept when the first edge id is
    // smaller than the last.
    for anchor in g.vertex_ids() {
        let mut path_edges: Vec<EdgeId> = Vec::new();
        let mut path_verts: Vec<VertexId> = vec![anchor];
        let mut on_path = vec![false; g.vertex_count()];
        on_path[anchor.0] = true;
        dfs_cycles(
            &adj,
            anchor,
            anchor,
            &mut path_edges,
            &mut path_verts,
            &mut on_path,
            &mut out,
            cap,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    adj: &[Vec<(EdgeId, VertexId)>],
    anchor: VertexId,
    cur: VertexId,
    path_edges: &mut Vec<EdgeId>,
    path_verts: &mut Vec<VertexId>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Cycle>,
    cap: usize,
) -> Result<(), CapExceeded> {
    for &(e, next) in &adj[cur.0] {
        if path_edges.last() == Some(&e) {
            continue;
        }
        if next == anchor {
            if !path_edges.is_empty() && path_edges[0] < e {
                if out.len() >= cap {
                    return Err(CapExceeded { cap });
                }
                let mut edges = path_edges.clone();
                edges.push(e);
                out.push(Cycle {
                    edges,
                    vertices: path_verts.clone(),
                });
            }
        } else if next > anchor && !on_path[next.0] {
            on_path[next.0] = true;
            path_edges.push(e);
            path_verts.push(next);
            dfs_cycles(adj, anchor, next, path_edges, path_verts, on_path, out, cap)?;
            path_verts.pop();
            path_edges.pop();
            on_path[next.0] = false;
        }
    }
    Ok(())
}

/// Sign of an elementary cycle given as an edge set: the product of its edge
/// signatures. Rejects sets that are not a single elementary cycle.
pub fn cycle_sign(g: &BidirectedGraph, edges: &BTreeSet<EdgeId>) -> Result<Sign, MatroidError> {
    if edges.is_empty() {
        return Err(MatroidError::NotACycle);
    }
    let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &e in edges {
        let edge = g.edge(e);
        *degree.entry(edge.u).or_insert(0) += 1;
        *degree.entry(edge.v).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d != 2) || !edge_set_connected(g, edges) {
        return Err(MatroidError::NotACycle);
    }
    Ok(edges
        .iter()
        .fold(Sign::Plus, |acc, e| acc * g.edge(*e).signature()))
}

fn edge_set_connected(g: &BidirectedGraph, edges: &BTreeSet<EdgeId>) -> bool {
    let verts: BTreeSet<VertexId> = edges
        .iter()
        .flat_map(|&e| [g.edge(e).u, g.edge(e).v])
        .collect();
    if verts.is_empty() {
        return true;
    }
    let mut seen = BTreeSet::from([*verts.iter().next().unwrap()]);
    let mut frontier = vec![*verts.iter().next().unwrap()];
    while let Some(v) = frontier.pop() {
        for &e in edges {
            let edge = g.edge(e);
            for (a, b) in [(edge.u, edge.v), (edge.v, edge.u)] {
                if a == v && !seen.contains(&b) {
                    seen.insert(b);
                    frontier.push(b);
                }
            }
        }
    }
    seen == verts
}

/// The three circuit shapes of the frame matroid. `tag` gives the customary
/// short names i, ii, iii.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CircuitType {
    PositiveCycle,
    TightHandcuff,
    LooseHandcuff,
}

impl CircuitType {
    pub fn tag(self) -> &'static str {
        match self {
            CircuitType::PositiveCycle => "i",
            CircuitType::TightHandcuff => "ii",
            CircuitType::LooseHandcuff => "iii",
        }
    }
}

/// Does the edge set match exactly one of the three circuit shapes? Returns
/// the type, or `None` for anything else (including a lone negative cycle,
/// theta subgraphs, and disconnected sets).
pub fn classify_circuit(g: &BidirectedGraph, f: &BTreeSet<EdgeId>) -> Option<CircuitType> {
    if f.is_empty() || !edge_set_connected(g, f) {
        return None;
    }
    let verts: BTreeSet<VertexId> = f
        .iter()
        .flat_map(|&e| [g.edge(e).u, g.edge(e).v])
        .collect();
    let m = f.len();
    let n = verts.len();
    if m == n {
        return match cycle_sign(g, f) {
            Ok(Sign::Plus) => Some(CircuitType::PositiveCycle),
            _ => None,
        };
    }
    if m != n + 1 {
        return None;
    }
    let cycles = elementary_cycles(g, Some(f), m * m + 4).ok()?;
    if cycles.len() != 2 {
        return None;
    }
    let (c1, c2) = (&cycles[0], &cycles[1]);
    if c1.sign(g) != Sign::Minus || c2.sign(g) != Sign::Minus {
        return None;
    }
    let shared: BTreeSet<VertexId> = c1
        .vertex_set()
        .intersection(&c2.vertex_set())
        .copied()
        .collect();
    let cycle_edges: BTreeSet<EdgeId> = c1.edge_set().union(&c2.edge_set()).copied().collect();
    if shared.len() == 1 && cycle_edges == *f {
        return Some(CircuitType::TightHandcuff);
    }
    if !shared.is_empty() {
        return None;
    }
    // Loose handcuff: the rest of F must be one elementary chain from a
    // vertex of c1 to a vertex of c2, internally avoiding both cycles.
    let chain: BTreeSet<EdgeId> = f.difference(&cycle_edges).copied().collect();
    if chain.is_empty() {
        return None;
    }
    let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &e in &chain {
        let edge = g.edge(e);
        if edge.is_loop() {
            return None;
        }
        *degree.entry(edge.u).or_insert(0) += 1;
        *degree.entry(edge.v).or_insert(0) += 1;
    }
    let ends: Vec<VertexId> = degree
        .iter()
        .filter(|(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .collect();
    if ends.len() != 2
        || degree.values().any(|&d| d > 2)
        || !edge_set_connected(g, &chain)
    {
        return None;
    }
    let on_c1 = |v: VertexId| c1.vertex_set().contains(&v);
    let on_c2 = |v: VertexId| c2.vertex_set().contains(&v);
    let spans = (on_c1(ends[0]) && on_c2(ends[1])) || (on_c1(ends[1]) && on_c2(ends[0]));
    let interior_ok = degree
        .iter()
        .all(|(&v, &d)| d != 2 || (!on_c1(v) && !on_c2(v)));
    if spans && interior_ok {
        Some(CircuitType::LooseHandcuff)
    } else {
        None
    }
}

/// A circuit enumeration, possibly cut short at the cap.
#[derive(Clone, Debug)]
pub struct CircuitList {
    pub circuits: Vec<(BTreeSet<EdgeId>, CircuitType)>,
    pub truncated: bool,
}

/// Enumerate matroid circuits: positive cycles give type i; pairs of
/// negative cycles give types ii and iii, the latter once per connecting
/// chain. Deduplicated, sorted by (size, edge ids), and cut off with
/// `truncated` set once more than `cap` circuits arise.
pub fn enumerate_circuits(g: &BidirectedGraph, cap: usize) -> CircuitList {
    let cycles = match elementary_cycles(g, None, cap) {
        Ok(c) => c,
        Err(_) => {
            return CircuitList {
                circuits: Vec::new(),
                truncated: true,
            }
        }
    };
    let mut seen: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut circuits = Vec::new();
    let mut truncated = false;
    let mut push = |set: BTreeSet<EdgeId>, ty: CircuitType, truncated: &mut bool| -> bool {
        if seen.contains(&set) {
            return true;
        }
        if seen.len() >= cap {
            *truncated = true;
            return false;
        }
        seen.insert(set.clone());
        circuits.push((set, ty));
        true
    };
    for c in &cycles {
        if c.sign(g) == Sign::Plus && !push(c.edge_set(), CircuitType::PositiveCycle, &mut truncated)
        {
            break;
        }
    }
    let negatives: Vec<&Cycle> = cycles.iter().filter(|c| c.sign(g) == Sign::Minus).collect();
    'pairs: for i in 0..negatives.len() {
        for j in (i + 1)..negatives.len() {
            let (c1, c2) = (negatives[i], negatives[j]);
            let shared: BTreeSet<VertexId> = c1
                .vertex_set()
                .intersection(&c2.vertex_set())
                .copied()
                .collect();
            if shared.len() == 1 {
                let set: BTreeSet<EdgeId> =
                    c1.edge_set().union(&c2.edge_set()).copied().collect();
                if !push(set, CircuitType::TightHandcuff, &mut truncated) {
                    break 'pairs;
                }
            } else if shared.is_empty() {
                let cycle_edges: BTreeSet<EdgeId> =
                    c1.edge_set().union(&c2.edge_set()).copied().collect();
                for chain in connecting_chains(g, c1, c2, &cycle_edges) {
                    let set: BTreeSet<EdgeId> =
                        cycle_edges.union(&chain).copied().collect();
                    if !push(set, CircuitType::LooseHandcuff, &mut truncated) {
                        break 'pairs;
                    }
                }
            }
        }
    }
    circuits.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    CircuitList {
        circuits,
        truncated,
    }
}

/// All elementary chains from a vertex of `c1` to a vertex of `c2` whose
/// interior avoids both cycles, as edge sets.
fn connecting_chains(
    g: &BidirectedGraph,
    c1: &Cycle,
    c2: &Cycle,
    cycle_edges: &BTreeSet<EdgeId>,
) -> Vec<BTreeSet<EdgeId>> {
    let v1 = c1.vertex_set();
    let v2 = c2.vertex_set();
    let mut out = Vec::new();
    let mut path: Vec<EdgeId> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &BidirectedGraph,
        cur: VertexId,
        v1: &BTreeSet<VertexId>,
        v2: &BTreeSet<VertexId>,
        cycle_edges: &BTreeSet<EdgeId>,
        path: &mut Vec<EdgeId>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<BTreeSet<EdgeId>>,
    ) {
        for e in g.edge_ids() {
            if cycle_edges.contains(&e) || path.contains(&e) {
                continue;
            }
            let edge = g.edge(e);
            let next = if edge.u == cur {
                edge.v
            } else if edge.v == cur {
                edge.u
            } else {
                continue;
            };
            if edge.is_loop() {
                continue;
            }
            if v2.contains(&next) {
                let mut set: BTreeSet<EdgeId> = path.iter().copied().collect();
                set.insert(e);
                out.push(set);
                continue;
            }
            if v1.contains(&next) || on_path[next.0] {
                continue;
            }
            on_path[next.0] = true;
            path.push(e);
            rec(g, next, v1, v2, cycle_edges, path, on_path, out);
            path.pop();
            on_path[next.0] = false;
        }
    }
    for &start in &v1 {
        rec(g, start, &v1, &v2, cycle_edges, &mut path, &mut on_path, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Number of connected components whose induced signed graph is balanced.
/// An isolated vertex is vacuously balanced.
pub fn balanced_component_count(g: &BidirectedGraph) -> usize {
    g.balance_analysis().balanced_component_count()
}

/// Rank of the frame matroid: |V| - b(G).
pub fn rank(g: &BidirectedGraph) -> usize {
    g.vertex_count() - balanced_component_count(g)
}

/// First handcuff circuit (type ii or iii) in deterministic order, or `None`
/// when the graph has none. Fails when the negative-cycle enumeration
/// overruns `cap`, rather than guessing.
pub fn find_handcuff(
    g: &BidirectedGraph,
    cap: usize,
) -> Result<Option<(BTreeSet<EdgeId>, CircuitType)>, CapExceeded> {
    let cycles = elementary_cycles(g, None, cap)?;
    let (comp_of, _) = g.components();
    let negatives: Vec<&Cycle> = cycles.iter().filter(|c| c.sign(g) == Sign::Minus).collect();
    for i in 0..negatives.len() {
        for j in (i + 1)..negatives.len() {
            let (c1, c2) = (negatives[i], negatives[j]);
            if comp_of[c1.vertices[0].0] != comp_of[c2.vertices[0].0] {
                continue;
            }
            let shared: BTreeSet<VertexId> = c1
                .vertex_set()
                .intersection(&c2.vertex_set())
                .copied()
                .collect();
            if shared.len() == 1 {
                let set = c1.edge_set().union(&c2.edge_set()).copied().collect();
                return Ok(Some((set, CircuitType::TightHandcuff)));
            }
            if shared.is_empty() {
                let cycle_edges: BTreeSet<EdgeId> =
                    c1.edge_set().union(&c2.edge_set()).copied().collect();
                let chains = connecting_chains(g, c1, c2, &cycle_edges);
                let chain = chains
                    .first()
                    .expect("same component, so a connecting chain exists");
                let set = cycle_edges.union(chain).copied().collect();
                return Ok(Some((set, CircuitType::LooseHandcuff)));
            }
        }
    }
    Ok(None)
}

/// No circuits of type ii or iii; equivalently, within each connected
/// component every two negative cycles share at least two vertices.
pub fn is_quasibalanced(g: &BidirectedGraph, cap: usize) -> Result<bool, CapExceeded> {
    Ok(find_handcuff(g, cap)?.is_none())
}

/// Is every pair of distinct edges contained in a common circuit? Vacuously
/// true on graphs with at most one edge. Fails when circuit enumeration is
/// truncated.
pub fn is_matroid_connected(g: &BidirectedGraph, cap: usize) -> Result<bool, CapExceeded> {
    let list = enumerate_circuits(g, cap);
    if list.truncated {
        return Err(CapExceeded { cap });
    }
    for a in g.edge_ids() {
        for b in g.edge_ids() {
            if b <= a {
                continue;
            }
            if !list
                .circuits
                .iter()
                .any(|(set, _)| set.contains(&a) && set.contains(&b))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Summary of the frame-matroid analysis of one graph.
#[derive(Clone, Debug)]
pub struct MatroidReport {
    pub rank: usize,
    pub balanced_components: usize,
    pub circuits: CircuitList,
    pub quasibalanced: bool,
    pub connected: Option<bool>,
}

/// Compute rank, circuits, quasibalance and connectivity in one pass.
/// Quasibalance requires the full negative-cycle enumeration, so a cap
/// overrun is an error; connectivity degrades to `None` when the circuit
/// list itself is truncated.
pub fn matroid_report(g: &BidirectedGraph, cap: usize) -> Result<MatroidReport, CapExceeded> {
    let quasibalanced = is_quasibalanced(g, cap)?;
    let circuits = enumerate_circuits(g, cap);
    let connected = if circuits.truncated {
        None
    } else {
        Some(is_matroid_connected(g, cap)?)
    };
    Ok(MatroidReport {
        rank: rank(g),
        balanced_components: balanced_component_count(g),
        circuits,
        quasibalanced,
        connected,
    })
}
