//! Independent brute-force reference implementations.
//!
//! Everything here re-derives its answers from the definitions on the raw
//! graph: chains are enumerated directly (no state digraph), reductions come
//! from scanning edge subsets for the minimal-generating property, and
//! matroid circuits are the minimal dependent sets of an explicit
//! independence test. The only engine code reused is the circuit *shape*
//! classifier, which tags sets the independence oracle already found. These
//! routines are exponential and guarded; they exist to catch systematic bugs
//! in the engine on small instances, not to be fast.
//!
//! The random generator is fixed-seed and fully documented: vertex count
//! uniform in `2..=max_vertices`; edge count uniform in `0..=max_edges`
//! (clamped to the number of distinct signed-edge identities); endpoints
//! uniform and independent, so a loop appears with probability `1/|V|`;
//! half-edge signs uniform. A draw that duplicates an existing signed-edge
//! identity is redrawn: with duplicate identities the reduction of a
//! b-circuit-free graph stops being unique (two copies of one identity imply
//! each other, and either may be eliminated), which would break the
//! uniqueness suite. Duplicate identities remain legal in the data model and
//! are covered by dedicated tests.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use thiserror::Error;

use crate::closure;
use crate::graph::{BidirectedGraph, EdgeId, Sign, SignedEdgeKey, SignedVertex, VertexId};
use crate::matroid::{classify_circuit, enumerate_circuits, CircuitType};
use crate::reduction::all_reductions;
use crate::state::{BPath, Chain, Direction, StateDigraph, Step};

/// Guards for the exponential enumerations.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Chain-length bound; `None` means `2|V|`, which is enough for every
    /// b-path since no signed vertex repeats.
    pub max_chain_length: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 8,
            max_edges: 12,
            max_chain_length: None,
        }
    }
}

impl OracleConfig {
    fn admit(&self, g: &BidirectedGraph) -> Result<(), OracleError> {
        if g.vertex_count() > self.max_vertices || g.edge_count() > self.max_edges {
            return Err(OracleError::GuardExceeded {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }

    fn chain_bound(&self, g: &BidirectedGraph) -> usize {
        self.max_chain_length.unwrap_or(2 * g.vertex_count())
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance with {vertices} vertices / {edges} edges exceeds the oracle guards ({max_vertices} / {max_edges})")]
    GuardExceeded {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
}

/// Traversal options at `(v, dep)` over the active edges: every incident
/// half-edge carrying the required departure sign, in edge order. The
/// backward traversal of a sign-symmetric loop repeats the forward one and
/// is skipped.
fn departures(
    g: &BidirectedGraph,
    active: &dyn Fn(EdgeId) -> bool,
    v: VertexId,
    dep: Sign,
) -> Vec<(Step, VertexId, Sign)> {
    let mut out = Vec::new();
    for e in g.edge_ids().filter(|&e| active(e)) {
        let edge = g.edge(e);
        if edge.is_loop() {
            if edge.u != v {
                continue;
            }
            if edge.tau_u == dep {
                out.push((
                    Step {
                        edge: e,
                        dir: Direction::Forward,
                    },
                    edge.v,
                    edge.tau_v,
                ));
            }
            if edge.tau_v == dep && edge.tau_u != edge.tau_v {
                out.push((
                    Step {
                        edge: e,
                        dir: Direction::Backward,
                    },
                    edge.u,
                    edge.tau_u,
                ));
            }
        } else if edge.u == v && edge.tau_u == dep {
            out.push((
                Step {
                    edge: e,
                    dir: Direction::Forward,
                },
                edge.v,
                edge.tau_v,
            ));
        } else if edge.v == v && edge.tau_v == dep {
            out.push((
                Step {
                    edge: e,
                    dir: Direction::Backward,
                },
                edge.u,
                edge.tau_u,
            ));
        }
    }
    out
}

/// All b-paths from `x^a` to `y^b`, by literal chain enumeration.
///
/// Chains are grown edge by edge under the b-walk constraint (the interior
/// weight condition forces each departure sign), and a prefix is abandoned
/// as soon as it repeats a signed vertex, since the no-repeat condition can
/// never recover; arriving back at the start signed vertex may close a
/// b-circuit but never extends. What survives is exactly the set of chains
/// satisfying the b-path characterization.
pub fn brute_bpaths(
    g: &BidirectedGraph,
    from: SignedVertex,
    to: SignedVertex,
    cfg: &OracleConfig,
) -> Result<Vec<BPath>, OracleError> {
    cfg.admit(g)?;
    let mut found = Vec::new();
    let all = |_: EdgeId| true;
    search_chains(
        g,
        &all,
        from,
        to,
        cfg.chain_bound(g),
        &mut |chain| {
            found.push(BPath::from_chain(g, chain).expect("search yields b-paths"));
            true
        },
    );
    found.sort_by(|a, b| (a.len(), a.chain()).cmp(&(b.len(), b.chain())));
    Ok(found)
}

/// Early-exit existence check over an edge mask.
fn brute_bpath_exists(
    g: &BidirectedGraph,
    active: &dyn Fn(EdgeId) -> bool,
    from: SignedVertex,
    to: SignedVertex,
    max_len: usize,
) -> bool {
    let mut hit = false;
    search_chains(g, active, from, to, max_len, &mut |_| {
        hit = true;
        false
    });
    hit
}

/// Depth-first chain search; `emit` returns `false` to stop early.
fn search_chains(
    g: &BidirectedGraph,
    active: &dyn Fn(EdgeId) -> bool,
    from: SignedVertex,
    to: SignedVertex,
    max_len: usize,
    emit: &mut dyn FnMut(Chain) -> bool,
) {
    let start = from;
    let mut seen: BTreeSet<SignedVertex> = BTreeSet::from([start]);
    let mut steps: Vec<Step> = Vec::new();
    rec(g, active, start, from.vertex, from.sign, to, max_len, &mut seen, &mut steps, emit);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &BidirectedGraph,
        active: &dyn Fn(EdgeId) -> bool,
        start: SignedVertex,
        v: VertexId,
        dep: Sign,
        to: SignedVertex,
        max_len: usize,
        seen: &mut BTreeSet<SignedVertex>,
        steps: &mut Vec<Step>,
        emit: &mut dyn FnMut(Chain) -> bool,
    ) -> bool {
        if steps.len() >= max_len {
            return true;
        }
        for (step, head, arr) in departures(g, active, v, dep) {
            let next = SignedVertex::new(head, arr.flip());
            if head == to.vertex && arr == to.sign && (next == start || !seen.contains(&next)) {
                steps.push(step);
                let keep_going = emit(Chain::new(start.vertex, steps.clone()));
                steps.pop();
                if !keep_going {
                    return false;
                }
            }
            if next != start && !seen.contains(&next) {
                seen.insert(next);
                steps.push(step);
                let keep_going =
                    rec(g, active, start, head, arr.flip(), to, max_len, seen, steps, emit);
                steps.pop();
                seen.remove(&next);
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
}

fn signed_pairs(g: &BidirectedGraph) -> Vec<(SignedVertex, SignedVertex)> {
    let mut out = Vec::new();
    for x in g.vertex_ids() {
        for sx in [Sign::Minus, Sign::Plus] {
            for y in g.vertex_ids() {
                for sy in [Sign::Minus, Sign::Plus] {
                    out.push((SignedVertex::new(x, sx), SignedVertex::new(y, sy)));
                }
            }
        }
    }
    out
}

/// Closure keys straight from the definition: `{x^a, y^b}` is present
/// exactly when some b-path runs from `x^a` to `y^b`.
pub fn brute_closure(
    g: &BidirectedGraph,
    cfg: &OracleConfig,
) -> Result<BTreeSet<SignedEdgeKey>, OracleError> {
    cfg.admit(g)?;
    let all = |_: EdgeId| true;
    let bound = cfg.chain_bound(g);
    let mut keys = BTreeSet::new();
    for (from, to) in signed_pairs(g) {
        let key = SignedEdgeKey::new(from, to);
        if keys.contains(&key) {
            continue;
        }
        if brute_bpath_exists(g, &all, from, to, bound) {
            keys.insert(key);
        }
    }
    Ok(keys)
}

fn mask_generates(g: &BidirectedGraph, mask: u64, keys: &[SignedEdgeKey], bound: usize) -> bool {
    let active = move |e: EdgeId| mask & (1 << e.0) != 0;
    keys.iter()
        .all(|k| brute_bpath_exists(g, &active, k.first(), k.second(), bound))
}

/// All transitive reductions, found by scanning edge subsets for the
/// minimal-generating property. Subsets missing a mandatory edge (one whose
/// identity the rest of the graph does not imply) are skipped, and supersets
/// of recorded solutions are pruned, which keeps the scan small.
pub fn brute_reductions(
    g: &BidirectedGraph,
    cfg: &OracleConfig,
) -> Result<BTreeSet<BTreeSet<EdgeId>>, OracleError> {
    cfg.admit(g)?;
    let m = g.edge_count();
    let bound = cfg.chain_bound(g);
    let keys: Vec<SignedEdgeKey> = g.edge_keys().into_iter().collect();
    let full: u64 = if m >= 64 { u64::MAX } else { (1 << m) - 1 };
    let mut mandatory: u64 = 0;
    for e in 0..m {
        if !mask_generates(g, full & !(1 << e), &keys, bound) {
            mandatory |= 1 << e;
        }
    }
    let optional: Vec<usize> = (0..m).filter(|e| mandatory & (1 << e) == 0).collect();
    let mut results: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut found: Vec<u64> = Vec::new();
    for size in 0..=optional.len() {
        for combo in combinations(optional.len(), size) {
            let mask = mandatory
                | combo
                    .iter()
                    .fold(0u64, |acc, &i| acc | (1 << optional[i]));
            if found.iter().any(|&f| f | mask == mask) {
                continue;
            }
            if mask_generates(g, mask, &keys, bound) {
                found.push(mask);
                results.insert(
                    (0..m)
                        .filter(|e| mask & (1 << e) != 0)
                        .map(EdgeId)
                        .collect(),
                );
            }
        }
    }
    Ok(results)
}

/// `F` is independent in the frame matroid exactly when every component of
/// `(V, F)` contains at most one cycle and that cycle is negative. The
/// unique cycle of a unicyclic component is what remains after repeatedly
/// peeling degree-one vertices.
pub fn is_frame_independent(g: &BidirectedGraph, subset: &BTreeSet<EdgeId>) -> bool {
    let mut comp: BTreeMap<VertexId, usize> = BTreeMap::new();
    let verts: BTreeSet<VertexId> = subset
        .iter()
        .flat_map(|&e| [g.edge(e).u, g.edge(e).v])
        .collect();
    let mut next = 0;
    for &start in &verts {
        if comp.contains_key(&start) {
            continue;
        }
        let mut frontier = vec![start];
        comp.insert(start, next);
        while let Some(v) = frontier.pop() {
            for &e in subset {
                let edge = g.edge(e);
                for (a, b) in [(edge.u, edge.v), (edge.v, edge.u)] {
                    if a == v && !comp.contains_key(&b) {
                        comp.insert(b, next);
                        frontier.push(b);
                    }
                }
            }
        }
        next += 1;
    }
    for c in 0..next {
        let edges: BTreeSet<EdgeId> = subset
            .iter()
            .copied()
            .filter(|&e| comp[&g.edge(e).u] == c)
            .collect();
        let vertices = comp.values().filter(|&&x| x == c).count();
        if edges.len() > vertices {
            return false;
        }
        if edges.len() == vertices {
            // Exactly one cycle; peel leaves to isolate it.
            let mut remaining = edges.clone();
            loop {
                let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
                for &e in &remaining {
                    *degree.entry(g.edge(e).u).or_insert(0) += 1;
                    *degree.entry(g.edge(e).v).or_insert(0) += 1;
                }
                let before = remaining.len();
                remaining.retain(|&e| {
                    degree[&g.edge(e).u] != 1 && degree[&g.edge(e).v] != 1
                });
                if remaining.len() == before {
                    break;
                }
            }
            let sign = remaining
                .iter()
                .fold(Sign::Plus, |acc, &e| acc * g.edge(e).signature());
            if sign == Sign::Plus {
                return false;
            }
        }
    }
    true
}

/// A circuit as an edge set plus the shape tag the classifier assigns.
pub type TaggedCircuit = (BTreeSet<EdgeId>, Option<CircuitType>);

/// Matroid circuits as minimal dependent sets of the independence test,
/// tagged with the shape the engine classifier assigns (which must never be
/// `None` if the circuit theorem holds).
pub fn brute_circuits(
    g: &BidirectedGraph,
    cfg: &OracleConfig,
) -> Result<Vec<TaggedCircuit>, OracleError> {
    cfg.admit(g)?;
    let m = g.edge_count();
    let mut found_masks: Vec<u64> = Vec::new();
    let mut out = Vec::new();
    for size in 1..=m {
        for combo in combinations(m, size) {
            let mask = combo.iter().fold(0u64, |acc, &i| acc | (1 << i));
            if found_masks.iter().any(|&f| f | mask == mask) {
                continue;
            }
            let set: BTreeSet<EdgeId> = combo.iter().map(|&i| EdgeId(i)).collect();
            if !is_frame_independent(g, &set) {
                found_masks.push(mask);
                out.push((set.clone(), classify_circuit(g, &set)));
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(out)
}

/// Rank as the size of a largest independent subset.
pub fn brute_rank(g: &BidirectedGraph, cfg: &OracleConfig) -> Result<usize, OracleError> {
    cfg.admit(g)?;
    let m = g.edge_count();
    let mut best = 0;
    for mask in 0u64..(1 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let set: BTreeSet<EdgeId> = (0..m).filter(|e| mask & (1 << e) != 0).map(EdgeId).collect();
        if is_frame_independent(g, &set) {
            best = size;
        }
    }
    Ok(best)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in start..n {
            pick.push(i);
            rec(n, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(n, k, 0, &mut pick, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

/// All distinct signed-edge identities over `n` vertices, in canonical
/// order: three loop identities per vertex, four orientations per vertex
/// pair.
fn identity_universe(n: usize) -> Vec<(usize, Sign, usize, Sign)> {
    let mut out = Vec::new();
    for v in 0..n {
        out.push((v, Sign::Minus, v, Sign::Minus));
        out.push((v, Sign::Minus, v, Sign::Plus));
        out.push((v, Sign::Plus, v, Sign::Plus));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            for su in [Sign::Minus, Sign::Plus] {
                for sv in [Sign::Minus, Sign::Plus] {
                    out.push((u, su, v, sv));
                }
            }
        }
    }
    out
}

/// A seeded random bidirected graph within the given bounds; see the module
/// documentation for the exact distribution.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> BidirectedGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let available = identity_universe(n).len();
    let m = rng.gen_range(0..=max_edges.min(available));
    let mut builder = BidirectedGraph::builder();
    for v in 0..n {
        builder.vertex(format!("v{v}"));
    }
    let mut used: BTreeSet<SignedEdgeKey> = BTreeSet::new();
    let signs = [Sign::Minus, Sign::Plus];
    let mut i = 0;
    while i < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let su = signs[rng.gen_range(0..2)];
        let sv = signs[rng.gen_range(0..2)];
        let key = SignedEdgeKey::new(
            SignedVertex::new(VertexId(u), su),
            SignedVertex::new(VertexId(v), sv),
        );
        if !used.insert(key) {
            continue;
        }
        builder.edge(format!("e{i}"), format!("v{u}"), su, format!("v{v}"), sv);
        i += 1;
    }
    builder.build().expect("generated graph is well formed")
}

/// A seeded random all-positive acyclic graph: a DAG whose directed edge
/// `u -> v` is encoded as `{u^-, v^+}`.
pub fn random_all_positive_dag(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
) -> BidirectedGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let max_pairs = n * (n - 1) / 2;
    let m = rng.gen_range(0..=max_edges.min(max_pairs));
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut builder = BidirectedGraph::builder();
    for v in 0..n {
        builder.vertex(format!("v{v}"));
    }
    let mut i = 0;
    while i < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let (from, to) = if order[a] < order[b] {
            (order[a], order[b])
        } else {
            (order[b], order[a])
        };
        if !used.insert((from, to)) {
            continue;
        }
        builder.edge(
            format!("e{i}"),
            format!("v{from}"),
            Sign::Minus,
            format!("v{to}"),
            Sign::Plus,
        );
        i += 1;
    }
    builder.build().expect("generated graph is well formed")
}

/// Every bidirected graph with `1..=max_vertices` vertices and up to
/// `max_edges` edges drawn without repetition from the signed-edge identity
/// universe. This is the declared exhaustive family for the engine/oracle
/// equivalence suite.
pub fn exhaustive_small_graphs(max_vertices: usize, max_edges: usize) -> Vec<BidirectedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let universe = identity_universe(n);
        for size in 0..=max_edges.min(universe.len()) {
            for combo in combinations(universe.len(), size) {
                let mut builder = BidirectedGraph::builder();
                for v in 0..n {
                    builder.vertex(format!("v{v}"));
                }
                for (i, &idx) in combo.iter().enumerate() {
                    let (u, su, v, sv) = universe[idx];
                    builder.edge(format!("e{i}"), format!("v{u}"), su, format!("v{v}"), sv);
                }
                out.push(builder.build().expect("generated graph is well formed"));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Plain-digraph reference (the all-positive specialization)
// ---------------------------------------------------------------------------

/// Read an all-positive bidirected graph as a digraph: each edge points from
/// its negative end to its positive end. `None` when some edge is not
/// sign-mixed.
pub fn directed_pairs(g: &BidirectedGraph) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for e in g.edges() {
        match (e.tau_u, e.tau_v) {
            (Sign::Minus, Sign::Plus) => out.push((e.u.0, e.v.0)),
            (Sign::Plus, Sign::Minus) => out.push((e.v.0, e.u.0)),
            _ => return None,
        }
    }
    Some(out)
}

fn digraph_reach(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
    }
    let mut reach = vec![vec![false; n]; n];
    for s in 0..n {
        let mut stack: Vec<usize> = adj[s].clone();
        while let Some(v) = stack.pop() {
            if !reach[s][v] {
                reach[s][v] = true;
                stack.extend(adj[v].iter().copied());
            }
        }
    }
    reach
}

/// Ordinary digraph transitive closure: pairs reachable by at least one arc.
pub fn digraph_closure_pairs(n: usize, edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let reach = digraph_reach(n, edges);
    let mut out = BTreeSet::new();
    for (u, row) in reach.iter().enumerate() {
        for (v, &r) in row.iter().enumerate() {
            if r {
                out.insert((u, v));
            }
        }
    }
    out
}

/// Ordinary DAG transitive reduction: drop every arc with an alternative
/// path of length at least two. Unique for acyclic digraphs.
pub fn dag_reduction_pairs(n: usize, edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let reach = digraph_reach(n, edges);
    let mut out = BTreeSet::new();
    for &(u, v) in edges {
        let redundant = edges.iter().any(|&(a, w)| a == u && w != v && reach[w][v]);
        if !redundant {
            out.insert((u, v));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Engine/oracle agreement
// ---------------------------------------------------------------------------

/// Compare the engine against the oracle on one instance: b-path sets for
/// every signed end pair, closure keys, the full reduction set, and matroid
/// circuits with their tags. Returns a description of the first mismatch.
pub fn check_engine_oracle_agreement(
    g: &BidirectedGraph,
    cfg: &OracleConfig,
) -> Result<(), String> {
    let sd = StateDigraph::new(g);
    for (from, to) in signed_pairs(g) {
        let engine: BTreeSet<BPath> = sd
            .enumerate_bpaths(from, to, 1_000_000)
            .map_err(|e| format!("engine b-path cap: {e}"))?
            .into_iter()
            .collect();
        let oracle: BTreeSet<BPath> = brute_bpaths(g, from, to, cfg)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        if engine != oracle {
            return Err(format!(
                "b-path sets differ from {} to {}: engine {}, oracle {}",
                g.display_signed_vertex(from),
                g.display_signed_vertex(to),
                engine.len(),
                oracle.len()
            ));
        }
    }
    let engine_keys = closure::closure_keys(g);
    let oracle_keys = brute_closure(g, cfg).map_err(|e| e.to_string())?;
    if engine_keys != oracle_keys {
        return Err(format!(
            "closure keys differ: engine {}, oracle {}",
            engine_keys.len(),
            oracle_keys.len()
        ));
    }
    let engine_reductions =
        all_reductions(g, Some(cfg.max_edges)).map_err(|e| e.to_string())?;
    let oracle_reductions = brute_reductions(g, cfg).map_err(|e| e.to_string())?;
    if engine_reductions != oracle_reductions {
        return Err(format!(
            "reduction sets differ: engine {}, oracle {}",
            engine_reductions.len(),
            oracle_reductions.len()
        ));
    }
    let engine_circuits = enumerate_circuits(g, 1_000_000);
    if engine_circuits.truncated {
        return Err("engine circuit enumeration truncated".into());
    }
    let oracle_circuits = brute_circuits(g, cfg).map_err(|e| e.to_string())?;
    if engine_circuits.circuits.len() != oracle_circuits.len() {
        return Err(format!(
            "circuit counts differ: engine {}, oracle {}",
            engine_circuits.circuits.len(),
            oracle_circuits.len()
        ));
    }
    for ((es, et), (os, ot)) in engine_circuits.circuits.iter().zip(&oracle_circuits) {
        if es != os || Some(*et) != *ot {
            return Err(format!("circuit mismatch: engine {es:?} {et:?}, oracle {os:?} {ot:?}"));
        }
    }
    let engine_rank = crate::matroid::rank(g);
    let oracle_rank = brute_rank(g, cfg).map_err(|e| e.to_string())?;
    if engine_rank != oracle_rank {
        return Err(format!(
            "rank differs: engine {engine_rank}, oracle {oracle_rank}"
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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

    fn sv(g: &BidirectedGraph, name: &str, sign: char) -> SignedVertex {
        SignedVertex::new(g.vertex_id(name).unwrap(), Sign::from_char(sign).unwrap())
    }

    #[test]
    fn brute_bpaths_examples() {
        let cfg = OracleConfig::default();
        let t = triangle_fixture();
        let paths = brute_bpaths(&t, sv(&t, "2", '-'), sv(&t, "3", '-'), &cfg).unwrap();
        assert_eq!(paths.len(), 2);
        let lens: Vec<usize> = paths.iter().map(|p| p.len()).collect();
        assert_eq!(lens, vec![1, 2]);

        let p = path_fixture();
        let paths = brute_bpaths(&p, sv(&p, "x", '-'), sv(&p, "y", '-'), &cfg).unwrap();
        assert_eq!(paths.len(), 1);

        let d = BidirectedGraph::from_parts(
            &["a", "b", "c", "d"],
            &[("p", "a", '+', "b", '-'), ("q", "c", '+', "d", '-')],
        )
        .unwrap();
        assert!(brute_bpaths(&d, sv(&d, "a", '+'), sv(&d, "c", '+'), &cfg)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn brute_closure_matches_figures() {
        let cfg = OracleConfig::default();
        let p = path_fixture();
        assert_eq!(brute_closure(&p, &cfg).unwrap().len(), 6);
        let t = triangle_fixture();
        assert_eq!(brute_closure(&t, &cfg).unwrap(), t.edge_keys());
    }

    #[test]
    fn brute_reductions_examples() {
        let cfg = OracleConfig::default();
        let t = triangle_fixture();
        let r = brute_reductions(&t, &cfg).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(
            r.iter().next().unwrap(),
            &BTreeSet::from([EdgeId(0), EdgeId(1)])
        );
    }

    #[test]
    fn brute_circuits_examples() {
        let cfg = OracleConfig::default();
        let c = chord_fixture();
        let circuits = brute_circuits(&c, &cfg).unwrap();
        assert_eq!(circuits.len(), 3);
        assert!(circuits
            .iter()
            .all(|(_, ty)| *ty == Some(CircuitType::PositiveCycle)));
    }

    #[test]
    fn guards_are_enforced(){
        let cfg = OracleConfig {
            max_vertices: 2,
            max_edges: 1,
            max_chain_length: None,
        };
        let t = triangle_fixture();
        assert!(matches!(
            brute_closure(&t, &cfg),
            Err(OracleError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn fixtures_agree_with_engine() {
        let cfg = OracleConfig::default();
        for g in [path_fixture(), triangle_fixture(), chord_fixture()] {
            check_engine_oracle_agreement(&g, &cfg).unwrap();
        }
    }

    #[test]
    fn duplicate_identity_edges_have_two_reductions() {
        // Two copies of one signed-edge identity imply each other, so either
        // copy may be eliminated: the reduction is not unique even though
        // the graph has no b-circuit.
        let g = BidirectedGraph::from_parts(
            &["x", "y"],
            &[("e", "x", '+', "y", '+'), ("f", "x", '+', "y", '+')],
        )
        .unwrap();
        assert!(!crate::state::has_bcircuit(&g));
        let cfg = OracleConfig::default();
        let r = brute_reductions(&g, &cfg).unwrap();
        assert_eq!(r.len(), 2);
        check_engine_oracle_agreement(&g, &cfg).unwrap();
    }

    #[test]
    fn random_generator_is_reproducible_and_duplicate_free() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let ga = random_graph(&mut a, 8, 12);
            let gb = random_graph(&mut b, 8, 12);
            assert_eq!(ga, gb);
            assert_eq!(ga.edge_keys().len(), ga.edge_count());
        }
    }

    #[test]
    fn dag_generator_is_acyclic_and_all_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_all_positive_dag(&mut rng, 7, 10);
            assert!(g.is_all_positive());
            assert!(!crate::state::has_bcircuit(&g));
            assert!(directed_pairs(&g).is_some());
        }
    }

    #[test]
    fn exhaustive_family_size() {
        let family = exhaustive_small_graphs(2, 2);
        // n=1: C(3,0)+C(3,1)+C(3,2) = 1+3+3; n=2: C(10,0)+C(10,1)+C(10,2) = 1+10+45.
        assert_eq!(family.len(), 7 + 56);
    }

    #[test]
    fn digraph_reference_behaves() {
        let edges = vec![(0, 1), (1, 2), (0, 2)];
        let closure = digraph_closure_pairs(3, &edges);
        assert_eq!(closure, BTreeSet::from([(0, 1), (0, 2), (1, 2)]));
        let reduction = dag_reduction_pairs(3, &edges);
        assert_eq!(reduction, BTreeSet::from([(0, 1), (1, 2)]));
    }
}
