//! The bidirected-graph data model.
//!
//! A bidirected graph is an undirected multigraph in which every edge end
//! (half-edge) independently carries a sign. The pair of half-edge signs
//! induces an edge signature `sigma(e) = -tau(e,u) * tau(e,v)`, which turns
//! the graph into a signed graph; all-positive bidirected graphs are ordinary
//! directed graphs. This module holds the graph type itself plus the
//! sign-level calculus: weights, sources and sinks, switching, balance and
//! antibalance.
//!
//! Graphs are immutable once built. Every operation is a pure function of its
//! inputs, so values can be shared freely across threads; "mutation" means
//! building a new graph (see [`BidirectedGraph::switch`]).

use std::collections::{HashMap, VecDeque};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A half-edge sign. Ordered with `Minus < Plus` so derived orderings match
/// the numeric values -1 and +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Index of a vertex in its graph's declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Index of an edge in its graph's declaration order. Declaration order is
/// also the default linear ordering used by transitive reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// A signed vertex `x^alpha`: one endpoint of an edge together with its
/// half-edge sign, or one end of a b-path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVertex {
    pub vertex: VertexId,
    pub sign: Sign,
}

impl SignedVertex {
    pub fn new(vertex: VertexId, sign: Sign) -> Self {
        SignedVertex { vertex, sign }
    }
}

/// Canonical identity of an edge type `{x^alpha, y^beta}`: the two signed
/// endpoints sorted by (vertex, sign). `{x^a, y^b}` and `{y^b, x^a}` collapse
/// to the same key, and a loop at `x` has exactly three distinct keys:
/// `{x^+,x^+}`, `{x^-,x^-}` and `{x^+,x^-}`.
///
/// Keys are what transitive closure tracks; the base multigraph itself keeps
/// parallel edges distinct by id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedEdgeKey {
    ends: [SignedVertex; 2],
}

impl SignedEdgeKey {
    pub fn new(a: SignedVertex, b: SignedVertex) -> Self {
        if a <= b {
            SignedEdgeKey { ends: [a, b] }
        } else {
            SignedEdgeKey { ends: [b, a] }
        }
    }

    pub fn first(&self) -> SignedVertex {
        self.ends[0]
    }

    pub fn second(&self) -> SignedVertex {
        self.ends[1]
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }

    /// The key after switching the vertex set `X`: ends at vertices of `X`
    /// have their sign negated, then the pair is re-canonicalized.
    pub fn switched(&self, in_x: impl Fn(VertexId) -> bool) -> SignedEdgeKey {
        let f = |sv: SignedVertex| {
            if in_x(sv.vertex) {
                SignedVertex::new(sv.vertex, sv.sign.flip())
            } else {
                sv
            }
        };
        SignedEdgeKey::new(f(self.ends[0]), f(self.ends[1]))
    }
}

/// An edge with its two signed endpoints. `u == v` is a loop; the two loop
/// half-edge signs are stored explicitly and independently as `tau_u` and
/// `tau_v` in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub u: VertexId,
    pub tau_u: Sign,
    pub v: VertexId,
    pub tau_v: Sign,
}

impl Edge {
    /// The induced signature `sigma(e) = -tau(e,u) * tau(e,v)`.
    pub fn signature(&self) -> Sign {
        (self.tau_u * self.tau_v).flip()
    }

    /// The edge weight `W(e) = tau(e,u) + tau(e,v)`, one of -2, 0, +2.
    pub fn weight(&self) -> i32 {
        self.tau_u.value() + self.tau_v.value()
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn key(&self) -> SignedEdgeKey {
        SignedEdgeKey::new(
            SignedVertex::new(self.u, self.tau_u),
            SignedVertex::new(self.v, self.tau_v),
        )
    }

    /// Half-edge sign at `x`, or `None` when `e` is not incident with `x`.
    /// For a loop, asking at its vertex returns the `u`-side sign.
    pub fn sign_at(&self, x: VertexId) -> Option<Sign> {
        if self.u == x {
            Some(self.tau_u)
        } else if self.v == x {
            Some(self.tau_v)
        } else {
            None
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge name `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Incremental constructor for [`BidirectedGraph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, Sign, String, Sign)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder::default()
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        self.vertices.push(name.into());
        self
    }

    pub fn edge(
        &mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        tau_u: Sign,
        v: impl Into<String>,
        tau_v: Sign,
    ) -> &mut Self {
        self.edges
            .push((id.into(), u.into(), tau_u, v.into(), tau_v));
        self
    }

    pub fn build(&self) -> Result<BidirectedGraph, GraphError> {
        let mut vertex_lookup = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if vertex_lookup.insert(name.clone(), VertexId(i)).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut edge_lookup = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, (id, u, tau_u, v, tau_v)) in self.edges.iter().enumerate() {
            if edge_lookup.insert(id.clone(), EdgeId(i)).is_some() {
                return Err(GraphError::DuplicateEdge(id.clone()));
            }
            let &u = vertex_lookup
                .get(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.clone()))?;
            let &v = vertex_lookup
                .get(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            edges.push(Edge {
                id: id.clone(),
                u,
                tau_u: *tau_u,
                v,
                tau_v: *tau_v,
            });
        }
        Ok(BidirectedGraph {
            vertices: self.vertices.clone(),
            edges,
            vertex_lookup,
            edge_lookup,
        })
    }
}

/// An immutable bidirected multigraph. Vertices and edges keep their
/// declaration order; loops and parallel edges are allowed.
#[derive(Clone, Debug)]
pub struct BidirectedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<String, EdgeId>,
}

impl PartialEq for BidirectedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for BidirectedGraph {}

impl BidirectedGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    /// Convenience constructor for literal graphs, mostly used in tests and
    /// examples. Sign characters are `'+'` and `'-'`.
    pub fn from_parts(
        vertices: &[&str],
        edges: &[(&str, &str, char, &str, char)],
    ) -> Result<BidirectedGraph, GraphError> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.vertex(*v);
        }
        for (id, u, su, v, sv) in edges {
            let su = Sign::from_char(*su).expect("sign character must be + or -");
            let sv = Sign::from_char(*sv).expect("sign character must be + or -");
            b.edge(*id, *u, su, *v, sv);
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_lookup.get(name).copied()
    }

    /// All half-edges at `x` in edge declaration order, `u`-end before
    /// `v`-end. A loop at `x` yields both of its half-edges.
    pub fn incidences(&self, x: VertexId) -> Vec<(EdgeId, Sign)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == x {
                out.push((EdgeId(i), e.tau_u));
            }
            if e.v == x {
                out.push((EdgeId(i), e.tau_v));
            }
        }
        out
    }

    /// The set of signed-edge keys realized by at least one edge.
    pub fn edge_keys(&self) -> BTreeSet<SignedEdgeKey> {
        self.edges.iter().map(|e| e.key()).collect()
    }

    pub fn display_signed_vertex(&self, sv: SignedVertex) -> String {
        format!("{}{}", self.vertex_name(sv.vertex), sv.sign)
    }

    pub fn display_key(&self, key: SignedEdgeKey) -> String {
        format!(
            "{{{},{}}}",
            self.display_signed_vertex(key.first()),
            self.display_signed_vertex(key.second())
        )
    }

    /// `W(x)`: the sum of half-edge signs at `x`. A loop contributes both of
    /// its signs; an isolated vertex has weight 0.
    pub fn vertex_weight(&self, x: VertexId) -> i32 {
        self.incidences(x).iter().map(|(_, s)| s.value()).sum()
    }

    /// Source vertices (every incident half-edge positive) and sink vertices
    /// (every incident half-edge negative). Isolated vertices appear in both
    /// sets.
    pub fn sources_and_sinks(&self) -> (BTreeSet<VertexId>, BTreeSet<VertexId>) {
        let mut sources = BTreeSet::new();
        let mut sinks = BTreeSet::new();
        for x in self.vertex_ids() {
            let inc = self.incidences(x);
            if inc.iter().all(|(_, s)| *s == Sign::Plus) {
                sources.insert(x);
            }
            if inc.iter().all(|(_, s)| *s == Sign::Minus) {
                sinks.insert(x);
            }
        }
        (sources, sinks)
    }

    /// Switching by a vertex set: every half-edge at a vertex of `x` has its
    /// sign negated (a loop at a switched vertex negates both ends). The edge
    /// signature of an edge changes exactly when one end is in `x`.
    /// Switching is an involution.
    pub fn switch(&self, x: &BTreeSet<VertexId>) -> BidirectedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            if x.contains(&e.u) {
                e.tau_u = e.tau_u.flip();
            }
            if x.contains(&e.v) {
                e.tau_v = e.tau_v.flip();
            }
        }
        g
    }

    /// [`BidirectedGraph::switch`] with vertex names, rejecting unknown ones.
    pub fn switch_by_names(&self, names: &[&str]) -> Result<BidirectedGraph, GraphError> {
        let mut x = BTreeSet::new();
        for name in names {
            let v = self
                .vertex_id(name)
                .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))?;
            x.insert(v);
        }
        Ok(self.switch(&x))
    }

    /// Every edge signature positive, i.e. `W(e) = 0` for every edge. Such a
    /// graph is an ordinary directed graph.
    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.signature() == Sign::Plus)
    }

    pub fn is_all_negative(&self) -> bool {
        self.edges.iter().all(|e| e.signature() == Sign::Minus)
    }

    /// The graph with every edge signature negated, realized by flipping
    /// exactly one half-edge per edge (the `v` end).
    pub fn negated(&self) -> BidirectedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.tau_v = e.tau_v.flip();
        }
        g
    }

    /// Connected components of the underlying graph, numbered by first
    /// appearance in vertex order. Returns the component index per vertex.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.u.0].push(e.v.0);
            adj[e.v.0].push(e.u.0);
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Per-component balance data: a signed graph is balanced when all its
    /// cycles are positive, equivalently when a switching function
    /// `s : V -> Sign` with `s(u)s(v) = sigma(e)` exists and every loop is
    /// positive. The switching function is rooted at the first vertex of each
    /// component in declaration order, which gets `Plus`.
    pub(crate) fn balance_analysis(&self) -> BalanceAnalysis {
        let (comp_of, comp_count) = self.components();
        let n = self.vertices.len();
        let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
        let mut comp_balanced = vec![true; comp_count];
        for e in &self.edges {
            if e.is_loop() {
                if e.signature() == Sign::Minus {
                    comp_balanced[comp_of[e.u.0]] = false;
                }
            } else {
                adj[e.u.0].push((e.v.0, e.signature()));
                adj[e.v.0].push((e.u.0, e.signature()));
            }
        }
        let mut switching = vec![Sign::Plus; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            switching[root] = Sign::Plus;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, sigma) in &adj[v] {
                    let expected = switching[v] * sigma;
                    if !seen[w] {
                        seen[w] = true;
                        switching[w] = expected;
                        queue.push_back(w);
                    } else if switching[w] != expected {
                        comp_balanced[comp_of[w]] = false;
                    }
                }
            }
        }
        BalanceAnalysis {
            comp_balanced,
            switching,
        }
    }

    /// All cycles positive?
    pub fn is_balanced(&self) -> bool {
        self.balance_analysis().comp_balanced.iter().all(|&b| b)
    }

    /// When balanced, the vertex set `X` such that switching `X` makes every
    /// edge positive: the vertices assigned `Minus` by the component-rooted
    /// switching function. `None` when unbalanced.
    pub fn balancing_switch_set(&self) -> Option<BTreeSet<VertexId>> {
        let a = self.balance_analysis();
        if !a.comp_balanced.iter().all(|&b| b) {
            return None;
        }
        Some(
            a.switching
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Sign::Minus)
                .map(|(i, _)| VertexId(i))
                .collect(),
        )
    }

    /// Balanced after negating every edge signature. Equivalently, some
    /// switching makes every edge negative.
    pub fn is_antibalanced(&self) -> bool {
        self.negated().is_balanced()
    }

    /// Same vertices, only the listed edges, in this graph's declaration
    /// order. Edge names are preserved; note that [`EdgeId`]s of the result
    /// refer to the new edge list.
    pub fn partial_graph(&self, keep: &BTreeSet<EdgeId>) -> BidirectedGraph {
        let mut edges = Vec::new();
        let mut edge_lookup = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep.contains(&EdgeId(i)) {
                edge_lookup.insert(e.id.clone(), EdgeId(edges.len()));
                edges.push(e.clone());
            }
        }
        BidirectedGraph {
            vertices: self.vertices.clone(),
            edges,
            vertex_lookup: self.vertex_lookup.clone(),
            edge_lookup,
        }
    }

}

pub(crate) struct BalanceAnalysis {
    pub comp_balanced: Vec<bool>,
    pub switching: Vec<Sign>,
}

impl BalanceAnalysis {
    pub fn balanced_component_count(&self) -> usize {
        self.comp_balanced.iter().filter(|&&b| b).count()
    }
}

/// Sum over keys of a switched graph, used when comparing closures under
/// switching.
pub fn switched_keys(
    keys: &BTreeSet<SignedEdgeKey>,
    x: &BTreeSet<VertexId>,
) -> BTreeSet<SignedEdgeKey> {
    keys.iter().map(|k| k.switched(|v| x.contains(&v))).collect()
}

/// Group a graph's edges by key, mostly a debugging aid for duplicate-key
/// multigraphs.
pub fn edges_by_key(g: &BidirectedGraph) -> BTreeMap<SignedEdgeKey, Vec<EdgeId>> {
    let mut map: BTreeMap<SignedEdgeKey, Vec<EdgeId>> = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        map.entry(e.key()).or_default().push(EdgeId(i));
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_fixture() -> BidirectedGraph {
        // x -(e1)- a -(e2)- b -(e3)- y with signs (-,-), (+,+), (-,-).
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

    #[test]
    fn signature_examples() {
        let g = BidirectedGraph::from_parts(
            &["x", "y"],
            &[
                ("a", "x", '+', "y", '-'),
                ("b", "x", '+', "y", '+'),
                ("l", "x", '-', "x", '-'),
            ],
        )
        .unwrap();
        assert_eq!(g.edge(EdgeId(0)).signature(), Sign::Plus);
        assert_eq!(g.edge(EdgeId(1)).signature(), Sign::Minus);
        assert_eq!(g.edge(EdgeId(2)).signature(), Sign::Minus);
    }

    #[test]
    fn edge_weight_examples() {
        let g = BidirectedGraph::from_parts(
            &["x", "y"],
            &[("a", "x", '+', "y", '-'), ("b", "x", '+', "y", '+')],
        )
        .unwrap();
        assert_eq!(g.edge(EdgeId(0)).weight(), 0);
        assert_eq!(g.edge(EdgeId(1)).weight(), 2);
        let p = path_fixture();
        assert_eq!(p.edge(EdgeId(0)).weight(), -2);
    }

    #[test]
    fn signature_weight_relation() {
        // sigma(e) = +1 exactly when W(e) = 0.
        for (su, sv) in [('+', '+'), ('+', '-'), ('-', '+'), ('-', '-')] {
            let g =
                BidirectedGraph::from_parts(&["x", "y"], &[("e", "x", su, "y", sv)]).unwrap();
            let e = g.edge(EdgeId(0));
            assert!(matches!(e.weight(), -2 | 0 | 2));
            assert_eq!(e.signature() == Sign::Plus, e.weight() == 0);
        }
    }

    #[test]
    fn vertex_weight_examples() {
        let g = BidirectedGraph::from_parts(&["z"], &[]).unwrap();
        assert_eq!(g.vertex_weight(VertexId(0)), 0);

        let p = path_fixture();
        let a = p.vertex_id("a").unwrap();
        assert_eq!(p.vertex_weight(a), 0);

        // Loop contributes both of its half-edge signs.
        let l = BidirectedGraph::from_parts(&["x"], &[("l", "x", '+', "x", '+')]).unwrap();
        assert_eq!(l.vertex_weight(VertexId(0)), 2);
    }

    #[test]
    fn vertex_weight_seven_vertex_graph() {
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
        assert_eq!(g.vertex_weight(g.vertex_id("5").unwrap()), 2);
    }

    #[test]
    fn sources_and_sinks_examples() {
        let g = BidirectedGraph::from_parts(&["x", "y"], &[("e", "x", '+', "y", '-')]).unwrap();
        let (sources, sinks) = g.sources_and_sinks();
        assert_eq!(sources, BTreeSet::from([VertexId(0)]));
        assert_eq!(sinks, BTreeSet::from([VertexId(1)]));

        let p = path_fixture();
        let (sources, sinks) = p.sources_and_sinks();
        assert!(sources.is_empty());
        assert_eq!(
            sinks,
            BTreeSet::from([p.vertex_id("x").unwrap(), p.vertex_id("y").unwrap()])
        );

        // An isolated vertex is both a source and a sink.
        let z = BidirectedGraph::from_parts(&["z"], &[]).unwrap();
        let (sources, sinks) = z.sources_and_sinks();
        assert_eq!(sources, sinks);
        assert_eq!(sources, BTreeSet::from([VertexId(0)]));
    }

    #[test]
    fn switch_examples() {
        let t = triangle_fixture();
        assert_eq!(t.switch(&BTreeSet::new()), t);

        // Switching every vertex negates all half-edges but no signature.
        let all: BTreeSet<_> = t.vertex_ids().collect();
        let s = t.switch(&all);
        for (e, f) in t.edges().iter().zip(s.edges()) {
            assert_eq!(e.tau_u.flip(), f.tau_u);
            assert_eq!(e.tau_v.flip(), f.tau_v);
            assert_eq!(e.signature(), f.signature());
        }

        let s1 = t.switch_by_names(&["1"]).unwrap();
        assert_eq!(s1.edge(EdgeId(0)).tau_v, Sign::Plus); // e1 = {2-,1+}
        assert_eq!(s1.edge(EdgeId(1)).tau_u, Sign::Minus); // e2 = {1-,3-}
        assert_eq!(s1.edge(EdgeId(2)), t.edge(EdgeId(2))); // e3 unchanged

        assert_eq!(
            t.switch_by_names(&["nope"]),
            Err(GraphError::UnknownVertex("nope".into()))
        );

        // Involution.
        let x = BTreeSet::from([VertexId(0), VertexId(2)]);
        assert_eq!(t.switch(&x).switch(&x), t);
    }

    #[test]
    fn all_positive_negative_examples() {
        let empty = BidirectedGraph::from_parts(&["x"], &[]).unwrap();
        assert!(empty.is_all_positive());
        assert!(empty.is_all_negative());

        let p = path_fixture();
        assert!(!p.is_all_positive());
        assert!(p.is_all_negative());

        let d = BidirectedGraph::from_parts(&["x", "y"], &[("e", "x", '+', "y", '-')]).unwrap();
        assert!(d.is_all_positive());
        assert!(!d.is_all_negative());
    }

    #[test]
    fn balance_examples() {
        let t = triangle_fixture();
        assert!(t.is_balanced());
        let x = t.balancing_switch_set().unwrap();
        assert_eq!(x, BTreeSet::from([t.vertex_id("2").unwrap()]));
        assert!(t.switch(&x).is_all_positive());

        // A negative loop is a negative cycle of length one.
        let l = BidirectedGraph::from_parts(&["x"], &[("l", "x", '+', "x", '+')]).unwrap();
        assert!(!l.is_balanced());
        assert!(l.balancing_switch_set().is_none());

        // A positive loop never obstructs balance.
        let pl = BidirectedGraph::from_parts(&["x"], &[("l", "x", '+', "x", '-')]).unwrap();
        assert!(pl.is_balanced());

        let c = chord_fixture();
        assert!(c.is_balanced());
        let x = c.balancing_switch_set().unwrap();
        assert!(c.switch(&x).is_all_positive());
    }

    #[test]
    fn antibalance_examples() {
        let p = path_fixture();
        assert!(p.is_all_negative());
        assert!(p.is_antibalanced());

        let pl = BidirectedGraph::from_parts(&["x"], &[("l", "x", '+', "x", '-')]).unwrap();
        assert!(!pl.is_antibalanced());

        // Positive triangle of odd length: balanced but not antibalanced.
        let t = triangle_fixture();
        assert!(!t.is_antibalanced());
    }

    #[test]
    fn handshake_identity() {
        let g = chord_fixture();
        let vertex_total: i32 = g.vertex_ids().map(|v| g.vertex_weight(v)).sum();
        let edge_total: i32 = g.edges().iter().map(|e| e.weight()).sum();
        assert_eq!(vertex_total, edge_total);
    }

    #[test]
    fn key_canonicalization() {
        let a = SignedVertex::new(VertexId(0), Sign::Plus);
        let b = SignedVertex::new(VertexId(1), Sign::Minus);
        assert_eq!(SignedEdgeKey::new(a, b), SignedEdgeKey::new(b, a));

        // Exactly three distinct loop keys at a vertex.
        let mut keys = BTreeSet::new();
        for s1 in [Sign::Minus, Sign::Plus] {
            for s2 in [Sign::Minus, Sign::Plus] {
                keys.insert(SignedEdgeKey::new(
                    SignedVertex::new(VertexId(0), s1),
                    SignedVertex::new(VertexId(0), s2),
                ));
            }
        }
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn builder_rejects_bad_input() {
        let mut b = GraphBuilder::new();
        b.vertex("x").vertex("x");
        assert_eq!(b.build(), Err(GraphError::DuplicateVertex("x".into())));

        let mut b = GraphBuilder::new();
        b.vertex("x").edge("e", "x", Sign::Plus, "y", Sign::Minus);
        assert_eq!(b.build(), Err(GraphError::UnknownVertex("y".into())));

        let mut b = GraphBuilder::new();
        b.vertex("x")
            .edge("e", "x", Sign::Plus, "x", Sign::Minus)
            .edge("e", "x", Sign::Plus, "x", Sign::Plus);
        assert_eq!(b.build(), Err(GraphError::DuplicateEdge("e".into())));
    }

    #[test]
    fn switching_preserves_balance() {
        let t = triangle_fixture();
        for mask in 0u32..8 {
            let x: BTreeSet<_> = (0..3).filter(|i| mask & (1 << i) != 0).map(VertexId).collect();
            assert_eq!(t.switch(&x).is_balanced(), t.is_balanced());
        }
    }

    #[test]
    fn antibalance_via_exhaustive_switching() {
        // Antibalanced iff some switching makes the graph all negative.
        for g in [path_fixture(), triangle_fixture(), chord_fixture()] {
            let n = g.vertex_count();
            let mut witness = false;
            for mask in 0u32..(1 << n) {
                let x: BTreeSet<_> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(VertexId).collect();
                if g.switch(&x).is_all_negative() {
                    witness = true;
                    break;
                }
            }
            assert_eq!(g.is_antibalanced(), witness);
        }
    }
}
