//! The derived state digraph and the b-walk / b-path machinery.
//!
//! Traversal in a bidirected graph must leave every intermediate vertex with
//! the sign opposite to the one it arrived with. Encoding "at vertex `x`,
//! next departure must use sign `s`" as a state `(x, s)` turns b-walks into
//! ordinary directed walks: each edge `{u^g, v^d}` contributes the two arcs
//! `(u,g) -> (v,-d)` and `(v,d) -> (u,-g)`. B-paths are then exactly the
//! simple paths of this digraph (with first = last state allowed, which is a
//! b-circuit), so existence queries are plain reachability and b-circuit
//! detection is cycle detection.
//!
//! The digraph borrows its graph and is immutable once built; queries are
//! pure and can run concurrently.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{BidirectedGraph, EdgeId, Sign, SignedVertex, VertexId};

/// Traversal direction of an edge within a chain: `Forward` departs from the
/// declared `u` end, `Backward` from the `v` end. For loops the direction
/// picks which half-edge is the departure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One traversal step of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: EdgeId,
    pub dir: Direction,
}

/// A raw chain: a start vertex plus a sequence of directed edge traversals.
/// Purely syntactic; see [`BWalk`] and [`BPath`] for the validated forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: VertexId,
    pub steps: Vec<Step>,
}

impl Chain {
    pub fn new(start: VertexId, steps: Vec<Step>) -> Self {
        Chain { start, steps }
    }

    /// Build a chain from a start vertex and edge names, inferring each
    /// direction from the current vertex. Loops default to `Forward`.
    /// Returns `None` for unknown names or non-incident consecutive edges.
    pub fn through(g: &BidirectedGraph, start: &str, edges: &[&str]) -> Option<Chain> {
        let mut cur = g.vertex_id(start)?;
        let mut steps = Vec::new();
        for name in edges {
            let id = g.edge_id(name)?;
            let e = g.edge(id);
            let dir = if e.u == cur {
                Direction::Forward
            } else if e.v == cur {
                Direction::Backward
            } else {
                return None;
            };
            cur = if dir == Direction::Forward { e.v } else { e.u };
            steps.push(Step { edge: id, dir });
        }
        Some(Chain::new(g.vertex_id(start)?, steps))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("step {index}: edge id out of range")]
    UnknownEdge { index: usize },
    #[error("step {index}: edge is not incident with the current vertex in the stated direction")]
    NotIncident { index: usize },
    #[error("a b-walk needs at least one edge")]
    Empty,
    #[error("interior weight is nonzero before step {index}")]
    SignBreak { index: usize },
    #[error("signed vertex repeats at positions {i} and {j}")]
    StateRepeat { i: usize, j: usize },
}

/// Per-step signs of a chain: `(departure, arrival)` for each traversal.
/// Fails on malformed chains only.
fn walk_signs(g: &BidirectedGraph, chain: &Chain) -> Result<Vec<(Sign, Sign)>, ChainError> {
    let mut cur = chain.start;
    let mut out = Vec::with_capacity(chain.steps.len());
    for (index, step) in chain.steps.iter().enumerate() {
        if step.edge.0 >= g.edge_count() {
            return Err(ChainError::UnknownEdge { index });
        }
        let e = g.edge(step.edge);
        let (tail, dep, head, arr) = match step.dir {
            Direction::Forward => (e.u, e.tau_u, e.v, e.tau_v),
            Direction::Backward => (e.v, e.tau_v, e.u, e.tau_u),
        };
        if tail != cur {
            return Err(ChainError::NotIncident { index });
        }
        out.push((dep, arr));
        cur = head;
    }
    Ok(out)
}

/// A validated b-walk: a chain of length at least one whose interior
/// half-edge signs cancel at every intermediate vertex. The end signs
/// `alpha` (first departure) and `beta` (last arrival) are derived.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BWalk {
    chain: Chain,
    /// `states[i]` is the signed vertex `x_i^{a_i}`, where `a_i` is the
    /// departure sign at `x_i` and the end state uses `a_k = -beta`.
    states: Vec<SignedVertex>,
    beta: Sign,
}

impl BWalk {
    pub fn from_chain(g: &BidirectedGraph, chain: Chain) -> Result<BWalk, ChainError> {
        let signs = walk_signs(g, &chain)?;
        if signs.is_empty() {
            return Err(ChainError::Empty);
        }
        for index in 1..signs.len() {
            if signs[index - 1].1 != signs[index].0.flip() {
                return Err(ChainError::SignBreak { index });
            }
        }
        let mut states = Vec::with_capacity(signs.len() + 1);
        let mut cur = chain.start;
        for (i, step) in chain.steps.iter().enumerate() {
            states.push(SignedVertex::new(cur, signs[i].0));
            let e = g.edge(step.edge);
            cur = match step.dir {
                Direction::Forward => e.v,
                Direction::Backward => e.u,
            };
        }
        let beta = signs.last().unwrap().1;
        states.push(SignedVertex::new(cur, beta.flip()));
        Ok(BWalk {
            chain,
            states,
            beta,
        })
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn steps(&self) -> &[Step] {
        &self.chain.steps
    }

    pub fn len(&self) -> usize {
        self.chain.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The signed-vertex sequence, with the end-state convention
    /// `a_k = -beta` so b-circuits close up exactly when first equals last.
    pub fn states(&self) -> &[SignedVertex] {
        &self.states
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.states.iter().map(|s| s.vertex).collect()
    }

    /// `x^alpha`, the start with its departure sign.
    pub fn start(&self) -> SignedVertex {
        self.states[0]
    }

    /// `y^beta`, the end with its arrival sign.
    pub fn end(&self) -> SignedVertex {
        SignedVertex::new(self.states.last().unwrap().vertex, self.beta)
    }

    /// The walk sign `-alpha * beta`, which also equals the product of the
    /// edge signatures along the walk.
    pub fn sign(&self) -> Sign {
        (self.start().sign * self.beta).flip()
    }

    /// The walk weight `alpha + beta`, which also equals the sum of the edge
    /// weights along the walk.
    pub fn weight(&self) -> i32 {
        self.start().sign.value() + self.beta.value()
    }

    /// Product of edge signatures along the walk; equal to [`BWalk::sign`].
    pub fn signature_product(&self, g: &BidirectedGraph) -> Sign {
        self.chain
            .steps
            .iter()
            .fold(Sign::Plus, |acc, s| acc * g.edge(s.edge).signature())
    }

    /// Sum of edge weights along the walk; equal to [`BWalk::weight`].
    pub fn weight_sum(&self, g: &BidirectedGraph) -> i32 {
        self.chain.steps.iter().map(|s| g.edge(s.edge).weight()).sum()
    }

    /// The reversed walk, from `y^beta` back to `x^alpha`.
    pub fn reversed(&self, g: &BidirectedGraph) -> BWalk {
        let steps = self
            .chain
            .steps
            .iter()
            .rev()
            .map(|s| Step {
                edge: s.edge,
                dir: s.dir.flip(),
            })
            .collect();
        let chain = Chain::new(self.end().vertex, steps);
        BWalk::from_chain(g, chain).expect("reversal of a b-walk is a b-walk")
    }

    /// A closed b-walk whose end signs are opposite, `beta = -alpha`.
    pub fn is_bcircuit(&self) -> bool {
        self.states[0] == *self.states.last().unwrap()
    }
}

/// A minimal b-walk: no repeated signed vertex, except that the first and
/// last may coincide (then the b-path is a b-circuit).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BPath(BWalk);

impl BPath {
    pub fn from_walk(walk: BWalk) -> Result<BPath, ChainError> {
        let states = walk.states();
        let k = states.len() - 1;
        for i in 0..states.len() {
            for j in (i + 1)..states.len() {
                if states[i] == states[j] && !(i == 0 && j == k) {
                    return Err(ChainError::StateRepeat { i, j });
                }
            }
        }
        Ok(BPath(walk))
    }

    pub fn from_chain(g: &BidirectedGraph, chain: Chain) -> Result<BPath, ChainError> {
        BPath::from_walk(BWalk::from_chain(g, chain)?)
    }

    pub fn walk(&self) -> &BWalk {
        &self.0
    }
}

impl std::ops::Deref for BPath {
    type Target = BWalk;

    fn deref(&self) -> &BWalk {
        &self.0
    }
}

/// Is the chain a b-walk? `Err` only for malformed chains; a well-formed
/// chain that fails the b-walk conditions (including the empty chain) gives
/// `Ok(false)`.
pub fn is_bwalk(g: &BidirectedGraph, chain: &Chain) -> Result<bool, ChainError> {
    match BWalk::from_chain(g, chain.clone()) {
        Ok(_) => Ok(true),
        Err(ChainError::Empty | ChainError::SignBreak { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Is the chain a b-path? Same error contract as [`is_bwalk`].
pub fn is_bpath(g: &BidirectedGraph, chain: &Chain) -> Result<bool, ChainError> {
    match BPath::from_chain(g, chain.clone()) {
        Ok(_) => Ok(true),
        Err(ChainError::Empty | ChainError::SignBreak { .. } | ChainError::StateRepeat { .. }) => {
            Ok(false)
        }
        Err(e) => Err(e),
    }
}

/// A state `(vertex, departure sign)` of the derived digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub vertex: VertexId,
    pub dep: Sign,
}

impl State {
    pub(crate) fn index(self) -> usize {
        self.vertex.0 * 2 + if self.dep == Sign::Minus { 0 } else { 1 }
    }

    fn from_index(i: usize) -> State {
        State {
            vertex: VertexId(i / 2),
            dep: if i.is_multiple_of(2) { Sign::Minus } else { Sign::Plus },
        }
    }
}

/// One arc of the state digraph, labeled with the edge traversal it encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateArc {
    pub from: State,
    pub to: State,
    pub step: Step,
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("enumeration cap {cap} exceeded")]
pub struct CapExceeded {
    pub cap: usize,
}

/// The state digraph of a bidirected graph (optionally with some edges
/// masked out). Arc order follows edge declaration order, forward arc first.
pub struct StateDigraph<'g> {
    graph: &'g BidirectedGraph,
    arcs: Vec<StateArc>,
    out: Vec<Vec<usize>>,
}

impl<'g> StateDigraph<'g> {
    pub fn new(graph: &'g BidirectedGraph) -> Self {
        Self::with_filter(graph, |_| true)
    }

    pub fn without_edges(graph: &'g BidirectedGraph, excluded: &BTreeSet<EdgeId>) -> Self {
        Self::with_filter(graph, |e| !excluded.contains(&e))
    }

    pub fn with_filter(graph: &'g BidirectedGraph, keep: impl Fn(EdgeId) -> bool) -> Self {
        let mut arcs = Vec::new();
        let mut out = vec![Vec::new(); graph.vertex_count() * 2];
        for (i, e) in graph.edges().iter().enumerate() {
            let id = EdgeId(i);
            if !keep(id) {
                continue;
            }
            let fwd = StateArc {
                from: State {
                    vertex: e.u,
                    dep: e.tau_u,
                },
                to: State {
                    vertex: e.v,
                    dep: e.tau_v.flip(),
                },
                step: Step {
                    edge: id,
                    dir: Direction::Forward,
                },
            };
            let bwd = StateArc {
                from: State {
                    vertex: e.v,
                    dep: e.tau_v,
                },
                to: State {
                    vertex: e.u,
                    dep: e.tau_u.flip(),
                },
                step: Step {
                    edge: id,
                    dir: Direction::Backward,
                },
            };
            for arc in [fwd, bwd] {
                out[arc.from.index()].push(arcs.len());
                arcs.push(arc);
            }
        }
        StateDigraph { graph, arcs, out }
    }

    pub fn graph(&self) -> &'g BidirectedGraph {
        self.graph
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[StateArc] {
        &self.arcs
    }

    /// The backward arc of a sign-symmetric loop duplicates the forward arc's
    /// traversal, so searches skip it to keep b-paths unique.
    fn effective(&self, arc: &StateArc) -> bool {
        if arc.step.dir == Direction::Forward {
            return true;
        }
        let e = self.graph.edge(arc.step.edge);
        !(e.is_loop() && e.tau_u == e.tau_v)
    }

    /// States reachable from `from` by a walk of at least one arc, in state
    /// index order. `from` itself appears exactly when it lies on a cycle.
    pub fn reachable(&self, from: SignedVertex) -> Vec<State> {
        let start = State {
            vertex: from.vertex,
            dep: from.sign,
        };
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::new();
        for &a in &self.out[start.index()] {
            let h = self.arcs[a].to.index();
            if !seen[h] {
                seen[h] = true;
                queue.push_back(h);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let h = self.arcs[a].to.index();
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, s)| **s)
            .map(|(i, _)| State::from_index(i))
            .collect()
    }

    /// Is there a b-walk from `x^alpha` to `y^beta` (at least one edge)?
    /// `from` carries the departure sign, `to` the arrival sign.
    pub fn exists_bwalk(&self, from: SignedVertex, to: SignedVertex) -> bool {
        let target = State {
            vertex: to.vertex,
            dep: to.sign.flip(),
        };
        self.reachable(from).contains(&target)
    }

    /// Shortest b-path from `x^alpha` to `y^beta`, breadth-first with ties
    /// broken by arc declaration order. `None` exactly when no b-walk exists.
    /// When `from` and `to` name the same vertex with opposite signs the
    /// result is a b-circuit through `from`.
    pub fn find_bpath(&self, from: SignedVertex, to: SignedVertex) -> Option<BPath> {
        let start = State {
            vertex: from.vertex,
            dep: from.sign,
        };
        let target = State {
            vertex: to.vertex,
            dep: to.sign.flip(),
        };
        let sidx = start.index();
        let tidx = target.index();
        let mut parent: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut discovered = vec![false; self.out.len()];
        let mut queue = VecDeque::new();
        for &a in &self.out[sidx] {
            if !self.effective(&self.arcs[a]) {
                continue;
            }
            let h = self.arcs[a].to.index();
            if !discovered[h] {
                discovered[h] = true;
                parent[h] = Some(a);
                queue.push_back(h);
            }
        }
        while let Some(x) = queue.pop_front() {
            if x == tidx {
                break;
            }
            for &a in &self.out[x] {
                if !self.effective(&self.arcs[a]) {
                    continue;
                }
                let h = self.arcs[a].to.index();
                if !discovered[h] {
                    discovered[h] = true;
                    parent[h] = Some(a);
                    queue.push_back(h);
                }
            }
        }
        if !discovered[tidx] {
            return None;
        }
        let mut steps_rev = Vec::new();
        let mut cur = tidx;
        loop {
            let a = parent[cur].expect("parent chain reaches the start");
            steps_rev.push(self.arcs[a].step);
            cur = self.arcs[a].from.index();
            if cur == sidx {
                break;
            }
        }
        steps_rev.reverse();
        let chain = Chain::new(from.vertex, steps_rev);
        let path = BPath::from_chain(self.graph, chain).expect("BFS yields a simple state path");
        debug_assert_eq!(path.start(), from);
        debug_assert_eq!(path.end(), to);
        Some(path)
    }

    /// All b-paths from `x^alpha` to `y^beta`, i.e. all simple state paths
    /// into the target state, in depth-first arc order. Fails once more than
    /// `cap` paths are found.
    pub fn enumerate_bpaths(
        &self,
        from: SignedVertex,
        to: SignedVertex,
        cap: usize,
    ) -> Result<Vec<BPath>, CapExceeded> {
        let start = State {
            vertex: from.vertex,
            dep: from.sign,
        };
        let target = State {
            vertex: to.vertex,
            dep: to.sign.flip(),
        };
        let sidx = start.index();
        let tidx = target.index();
        let mut visited = vec![false; self.out.len()];
        visited[sidx] = true;
        let mut steps: Vec<Step> = Vec::new();
        let mut found: Vec<BPath> = Vec::new();
        self.enumerate_rec(sidx, tidx, from, cap, &mut visited, &mut steps, &mut found)?;
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_rec(
        &self,
        cur: usize,
        tidx: usize,
        from: SignedVertex,
        cap: usize,
        visited: &mut Vec<bool>,
        steps: &mut Vec<Step>,
        found: &mut Vec<BPath>,
    ) -> Result<(), CapExceeded> {
        for &a in &self.out[cur] {
            let arc = &self.arcs[a];
            if !self.effective(arc) {
                continue;
            }
            let h = arc.to.index();
            if h == tidx {
                if found.len() >= cap {
                    return Err(CapExceeded { cap });
                }
                steps.push(arc.step);
                let chain = Chain::new(from.vertex, steps.clone());
                let path = BPath::from_chain(self.graph, chain)
                    .expect("simple state path is a b-path");
                found.push(path);
                steps.pop();
            } else if !visited[h] {
                visited[h] = true;
                steps.push(arc.step);
                self.enumerate_rec(h, tidx, from, cap, visited, steps, found)?;
                steps.pop();
                visited[h] = false;
            }
        }
        Ok(())
    }

    /// Does the digraph contain a directed cycle? Kahn's algorithm.
    pub fn has_cycle(&self) -> bool {
        self.topological_order().is_none()
    }

    /// A topological order of the states, or `None` when a cycle exists.
    pub fn topological_order(&self) -> Option<Vec<State>> {
        let n = self.out.len();
        let mut indegree = vec![0usize; n];
        for arc in &self.arcs {
            indegree[arc.to.index()] += 1;
        }
        let mut queue: VecDeque<usize> =
            (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(State::from_index(x));
            for &a in &self.out[x] {
                let h = self.arcs[a].to.index();
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
        if order.len() == n {
            Some(order)
        } else {
            None
        }
    }
}

/// Does the graph contain a b-circuit, i.e. a b-path from some `x^a` back to
/// `x^{-a}`? Equivalent to the state digraph containing a directed cycle.
pub fn has_bcircuit(g: &BidirectedGraph) -> bool {
    StateDigraph::new(g).has_cycle()
}

/// A shortest b-circuit, ties broken by state order; `None` when the graph
/// has none.
pub fn find_bcircuit(g: &BidirectedGraph) -> Option<BPath> {
    let sd = StateDigraph::new(g);
    let mut best: Option<BPath> = None;
    for v in g.vertex_ids() {
        for sign in [Sign::Minus, Sign::Plus] {
            let from = SignedVertex::new(v, sign);
            let to = SignedVertex::new(v, sign.flip());
            if let Some(p) = sd.find_bpath(from, to) {
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
    }
    best
}

/// Classification of a b-path by its cycle content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicClass {
    /// No cycle, or more than one: not a cyclic b-path.
    NotCyclic,
    /// The whole chain is a single elementary cycle.
    PurelyCyclic,
    /// The entry and exit paths share only the cycle vertex (for closed
    /// b-paths: they are edge-disjoint, closing up into a second cycle).
    TypeA,
    /// One endpoint sits on the cycle itself: a cycle with a single tail.
    TypeB,
    /// The entry and exit paths share a stem: they branch at a vertex away
    /// from the cycle.
    TypeC,
}

/// Classify a b-path as purely cyclic, cyclic of one of the three tree
/// attachment shapes, or not cyclic.
///
/// A cyclic b-path contains exactly one purely cyclic sub-b-path (as a
/// contiguous subchain), and that cycle is automatically negative: the two
/// visits to the cycle vertex use opposite departure signs, which forces the
/// sign product around the cycle to be minus.
pub fn classify_cyclic_bpath(g: &BidirectedGraph, path: &BPath) -> CyclicClass {
    let verts = path.vertices();
    let k = path.len();
    let closed = verts[0] == verts[k];
    if closed && distinct(&verts[..k]) {
        return CyclicClass::PurelyCyclic;
    }
    // Contiguous subchains that are elementary cycles, skipping the (0, k)
    // closure of the whole chain.
    let mut windows = Vec::new();
    for i in 0..=k {
        for j in (i + 1)..=k {
            if (i, j) == (0, k) || verts[i] != verts[j] {
                continue;
            }
            if distinct(&verts[i..j]) {
                windows.push((i, j));
            }
        }
    }
    if windows.len() != 1 {
        return CyclicClass::NotCyclic;
    }
    let (i, j) = windows[0];
    debug_assert_eq!(
        path.steps()[i..j]
            .iter()
            .fold(Sign::Plus, |acc, s| acc * g.edge(s.edge).signature()),
        Sign::Minus,
        "an interior cycle of a b-path is negative"
    );
    let entry_edges: BTreeSet<EdgeId> = path.steps()[..i].iter().map(|s| s.edge).collect();
    let exit_edges: BTreeSet<EdgeId> = path.steps()[j..].iter().map(|s| s.edge).collect();
    if closed {
        if entry_edges.is_disjoint(&exit_edges) {
            CyclicClass::TypeA
        } else {
            CyclicClass::TypeC
        }
    } else if i == 0 || j == k {
        CyclicClass::TypeB
    } else {
        let entry_verts: BTreeSet<VertexId> = verts[..=i].iter().copied().collect();
        let exit_verts: BTreeSet<VertexId> = verts[j..].iter().copied().collect();
        let shared: Vec<_> = entry_verts.intersection(&exit_verts).collect();
        if shared.len() == 1 {
            CyclicClass::TypeA
        } else {
            CyclicClass::TypeC
        }
    }
}

fn distinct(verts: &[VertexId]) -> bool {
    let set: BTreeSet<_> = verts.iter().collect();
    set.len() == verts.len()
}
