//! JSON and DOT forms of graphs and lattices, plus one-line summaries.
//!
//! Graph JSON: `{"kind":"simple"|"directed","vertices":n|[labels],"edges":[[u,v],..]}`
//! with an optional `"elements"` list naming the group element behind each
//! vertex. Lattice JSON: `{"nodes":[{"id":0,"order":1},..],"covers":[[lo,hi],..]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, GraphError, SimpleGraph};
use crate::lattice::{CyclicLattice, LatticeError, LatticeNode};
use crate::reconstruct::{CanonicalLabel, LabeledDigraph, LabeledGraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Simple,
    Directed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Vertices {
    Count(usize),
    Labels(Vec<String>),
}

impl Vertices {
    pub fn count(&self) -> usize {
        match self {
            Vertices::Count(n) => *n,
            Vertices::Labels(l) => l.len(),
        }
    }
}

/// Serialized graph or digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub kind: GraphKind,
    pub vertices: Vertices,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn simple(g: &SimpleGraph) -> Self {
        GraphDoc {
            kind: GraphKind::Simple,
            vertices: Vertices::Count(g.vertex_count()),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            elements: None,
        }
    }

    pub fn directed(d: &Digraph) -> Self {
        GraphDoc {
            kind: GraphKind::Directed,
            vertices: Vertices::Count(d.vertex_count()),
            edges: d.arcs().map(|(u, v)| [u, v]).collect(),
            elements: None,
        }
    }

    pub fn labeled(g: &LabeledGraph) -> Self {
        GraphDoc {
            vertices: Vertices::Labels(g.labels.iter().map(ToString::to_string).collect()),
            ..GraphDoc::simple(&g.graph)
        }
    }

    pub fn labeled_directed(d: &LabeledDigraph) -> Self {
        GraphDoc {
            vertices: Vertices::Labels(d.labels.iter().map(ToString::to_string).collect()),
            ..GraphDoc::directed(&d.graph)
        }
    }

    pub fn with_elements(mut self, elements: Vec<usize>) -> Self {
        self.elements = Some(elements);
        self
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        if let Some(e) = &doc.elements {
            if e.len() != doc.vertices.count() {
                return Err(FormatError::Invalid(format!(
                    "{} elements listed for {} vertices",
                    e.len(),
                    doc.vertices.count()
                )));
            }
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph documents serialize")
    }

    pub fn to_simple(&self) -> Result<SimpleGraph, FormatError> {
        if self.kind != GraphKind::Simple {
            return Err(FormatError::Invalid("expected a simple graph".into()));
        }
        Ok(SimpleGraph::from_edges(
            self.vertices.count(),
            self.edges.iter().map(|e| (e[0], e[1])),
        )?)
    }

    pub fn to_digraph(&self) -> Result<Digraph, FormatError> {
        if self.kind != GraphKind::Directed {
            return Err(FormatError::Invalid("expected a directed graph".into()));
        }
        Ok(Digraph::from_arcs(
            self.vertices.count(),
            self.edges.iter().map(|e| (e[0], e[1])),
        )?)
    }

    /// Canonical labels, when the vertices are given as `n<node>:g<index>`.
    pub fn canonical_labels(&self) -> Option<Vec<CanonicalLabel>> {
        match &self.vertices {
            Vertices::Labels(l) => l.iter().map(|s| parse_label(s)).collect(),
            Vertices::Count(_) => None,
        }
    }
}

/// Parse `n<node>:g<index>`.
pub fn parse_label(s: &str) -> Option<CanonicalLabel> {
    let (node, index) = s.strip_prefix('n')?.split_once(":g")?;
    Some(CanonicalLabel {
        node: crate::lattice::LatticeNodeId(node.parse().ok()?),
        index: index.parse().ok()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub nodes: Vec<LatticeNode>,
    pub covers: Vec<[usize; 2]>,
}

impl LatticeDoc {
    pub fn of(l: &CyclicLattice) -> Self {
        LatticeDoc {
            nodes: l.nodes().to_vec(),
            covers: l.covers().iter().map(|(a, b)| [a.0, b.0]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice documents serialize")
    }

    /// Parse and validate; node ids must be `0..n` in order.
    pub fn parse_lattice(text: &str) -> Result<CyclicLattice, FormatError> {
        let doc: LatticeDoc = serde_json::from_str(text)?;
        for (i, node) in doc.nodes.iter().enumerate() {
            if node.id.0 != i {
                return Err(FormatError::Invalid(format!(
                    "node ids must be dense and ordered: position {i} has id {}",
                    node.id.0
                )));
            }
        }
        Ok(CyclicLattice::new(
            doc.nodes.iter().map(|n| n.order).collect(),
            doc.covers.iter().map(|c| (c[0], c[1])),
        )?)
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot(
    keyword: &str,
    name: &str,
    n: usize,
    names: Option<&[String]>,
    edges: impl Iterator<Item = (usize, usize)>,
    arrow: &str,
) -> String {
    let mut out = format!("{keyword} {name} {{\n");
    for v in 0..n {
        match names {
            Some(names) => writeln!(out, "  {v} [label={}];", quote(&names[v])),
            None => writeln!(out, "  {v};"),
        }
        .expect("write to string");
    }
    for (u, v) in edges {
        writeln!(out, "  {u} {arrow} {v};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &SimpleGraph, name: &str, names: Option<&[String]>) -> String {
    dot("graph", name, g.vertex_count(), names, g.edges(), "--")
}

pub fn digraph_to_dot(d: &Digraph, name: &str, names: Option<&[String]>) -> String {
    dot("digraph", name, d.vertex_count(), names, d.arcs(), "->")
}

/// Hasse diagram drawn bottom-up, nodes labeled by order.
pub fn lattice_to_dot(l: &CyclicLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for node in l.nodes() {
        writeln!(out, "  n{} [label=\"{}\"];", node.id.0, node.order).expect("write to string");
    }
    for (a, b) in l.covers() {
        writeln!(out, "  n{} -> n{};", a.0, b.0).expect("write to string");
    }
    out.push_str("}\n");
    out
}

pub fn graph_summary(g: &SimpleGraph) -> String {
    format!("vertices={} edges={}", g.vertex_count(), g.edge_count())
}

pub fn digraph_summary(d: &Digraph) -> String {
    format!("vertices={} arcs={}", d.vertex_count(), d.arc_count())
}

pub fn lattice_summary(l: &CyclicLattice) -> String {
    format!("nodes={} covers={}", l.node_count(), l.cover_count())
}
