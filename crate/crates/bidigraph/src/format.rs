//! The `.bdg` text format and DOT export.
//!
//! A `.bdg` document is line-oriented:
//!
//! ```text
//! bdg 1
//! # optional comment
//! v x
//! v y
//! e e1 x + y -
//! ```
//!
//! One record per line: the `bdg 1` header, `v <name>` vertex declarations,
//! and `e <name> <u> <s> <v> <s>` edge declarations with signs `+` or `-`.
//! Edge order in the file is the default linear ordering used by transitive
//! reduction. Names are whitespace-free tokens; duplicates are rejected.
//! Parsing then serializing normalizes comments and whitespace away and is
//! otherwise the identity.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{BidirectedGraph, EdgeId, GraphBuilder, Sign};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `bdg 1`")]
    BadHeader { line: usize },
    #[error("missing `bdg 1` header")]
    MissingHeader,
    #[error("line {line}: unknown record `{kind}`")]
    UnknownRecord { line: usize, kind: String },
    #[error("line {line}: malformed vertex declaration")]
    BadVertex { line: usize },
    #[error("line {line}: malformed edge declaration")]
    BadEdge { line: usize },
    #[error("line {line}: bad sign token `{token}`")]
    BadSign { line: usize, token: String },
    #[error("line {line}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: duplicate edge `{name}`")]
    DuplicateEdge { line: usize, name: String },
    #[error("line {line}: undeclared endpoint `{name}`")]
    UndeclaredEndpoint { line: usize, name: String },
}

/// Parse a `.bdg` document. Vertices must be declared before the edges that
/// use them, so every error points at its exact line.
pub fn parse_bdg(text: &str) -> Result<BidirectedGraph, ParseError> {
    let mut builder = GraphBuilder::new();
    let mut seen_header = false;
    let mut vertices: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut edges: std::collections::HashSet<String> = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if !seen_header {
            if content.split_whitespace().collect::<Vec<_>>() == ["bdg", "1"] {
                seen_header = true;
                continue;
            }
            return Err(ParseError::BadHeader { line });
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "v" => {
                if tokens.len() != 2 {
                    return Err(ParseError::BadVertex { line });
                }
                if !vertices.insert(tokens[1].to_string()) {
                    return Err(ParseError::DuplicateVertex {
                        line,
                        name: tokens[1].to_string(),
                    });
                }
                builder.vertex(tokens[1]);
            }
            "e" => {
                if tokens.len() != 6 {
                    return Err(ParseError::BadEdge { line });
                }
                let sign = |token: &str| -> Result<Sign, ParseError> {
                    let mut chars = token.chars();
                    match (chars.next().and_then(Sign::from_char), chars.next()) {
                        (Some(s), None) => Ok(s),
                        _ => Err(ParseError::BadSign {
                            line,
                            token: token.to_string(),
                        }),
                    }
                };
                let su = sign(tokens[3])?;
                let sv = sign(tokens[5])?;
                if !edges.insert(tokens[1].to_string()) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        name: tokens[1].to_string(),
                    });
                }
                for endpoint in [tokens[2], tokens[4]] {
                    if !vertices.contains(endpoint) {
                        return Err(ParseError::UndeclaredEndpoint {
                            line,
                            name: endpoint.to_string(),
                        });
                    }
                }
                builder.edge(tokens[1], tokens[2], su, tokens[4], sv);
            }
            kind => {
                return Err(ParseError::UnknownRecord {
                    line,
                    kind: kind.to_string(),
                })
            }
        }
    }
    if !seen_header {
        return Err(ParseError::MissingHeader);
    }
    Ok(builder.build().expect("records were validated while parsing"))
}

/// Serialize to canonical `.bdg` text.
pub fn serialize_bdg(g: &BidirectedGraph) -> String {
    let mut out = String::from("bdg 1\n");
    for v in g.vertex_ids() {
        let _ = writeln!(out, "v {}", g.vertex_name(v));
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "e {} {} {} {} {}",
            e.id,
            g.vertex_name(e.u),
            e.tau_u,
            g.vertex_name(e.v),
            e.tau_v
        );
    }
    out
}

/// Styling hooks for [`export_dot`]: edges in these sets get marked.
#[derive(Clone, Debug, Default)]
pub struct DotAnnotations {
    pub added: std::collections::BTreeSet<EdgeId>,
    pub removed: std::collections::BTreeSet<EdgeId>,
    pub circuit: std::collections::BTreeSet<EdgeId>,
}

/// Emit an undirected DOT graph. Each edge is labeled with its two half-edge
/// signs `s_u,s_v`; annotated edges carry a `class` attribute plus a
/// distinguishing style.
pub fn export_dot(g: &BidirectedGraph, annotations: &DotAnnotations) -> String {
    let mut out = String::from("graph bidigraph {\n");
    for v in g.vertex_ids() {
        let _ = writeln!(out, "  \"{}\";", g.vertex_name(v));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let id = EdgeId(i);
        let mut attrs = format!("label=\"{},{}\"", e.tau_u, e.tau_v);
        if annotations.added.contains(&id) {
            attrs.push_str(", class=\"added\", style=dashed, color=blue");
        }
        if annotations.removed.contains(&id) {
            attrs.push_str(", class=\"removed\", style=dotted, color=red");
        }
        if annotations.circuit.contains(&id) {
            attrs.push_str(", class=\"circuit\", penwidth=2, color=forestgreen");
        }
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [{}];",
            g.vertex_name(e.u),
            g.vertex_name(e.v),
            attrs
        );
    }
    out.push_str("}\n");
    out
}
