//! Element-free reconstructions between the order-labeled cyclic subgroup
//! lattice and the power-type graphs.
//!
//! Every vertex built from a lattice carries a [`CanonicalLabel`]: the node
//! of the cyclic subgroup it generates and an index among that subgroup's
//! generators. Vertices are numbered in stage order of the lattice, and
//! within a node by index.

mod from_epow;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Digraph, SimpleGraph};
use crate::iso::IsoError;
use crate::lattice::divisors::phi;
use crate::lattice::{validate_lattice, CyclicLattice, LatticeNodeId, LatticeReport, LatticeWithSubgroups};
use crate::group::FiniteGroup;
pub use from_epow::lattice_from_epow;
pub use verify::{
    labeled_equivalent, labeled_equivalent_directed, oracle_labeled_diff, oracle_labeled_dirpow,
    oracle_labeled_epow, oracle_labeled_pow, roundtrip, same_node_twins, CheckOutcome,
    RoundTripReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("not an enhanced power graph: {0}")]
    NotAnEnhancedPowerGraph(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(LatticeReport),
    #[error(transparent)]
    Timeout(#[from] IsoError),
}

/// Names a vertex by the node of its cyclic subgroup and a generator index
/// in `1..=phi(order)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    pub node: LatticeNodeId,
    pub index: usize,
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}:g{}", self.node.0, self.index)
    }
}

/// A graph whose vertex `v` carries `labels[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: SimpleGraph,
    pub labels: Vec<CanonicalLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    pub graph: Digraph,
    pub labels: Vec<CanonicalLabel>,
}

fn node_colors(labels: &[CanonicalLabel]) -> Vec<usize> {
    labels.iter().map(|l| l.node.0).collect()
}

fn count_by_node(labels: &[CanonicalLabel]) -> BTreeMap<LatticeNodeId, usize> {
    let mut m = BTreeMap::new();
    for l in labels {
        *m.entry(l.node).or_insert(0) += 1;
    }
    m
}

impl LabeledGraph {
    pub fn node_colors(&self) -> Vec<usize> {
        node_colors(&self.labels)
    }

    /// Number of vertices carrying each node.
    pub fn label_counts(&self) -> BTreeMap<LatticeNodeId, usize> {
        count_by_node(&self.labels)
    }
}

impl LabeledDigraph {
    pub fn node_colors(&self) -> Vec<usize> {
        node_colors(&self.labels)
    }

    pub fn label_counts(&self) -> BTreeMap<LatticeNodeId, usize> {
        count_by_node(&self.labels)
    }
}

/// The `phi(order(v))` labels introduced at node `v`.
pub fn new_vertices(l: &CyclicLattice, v: LatticeNodeId) -> Vec<CanonicalLabel> {
    (1..=phi(l.order(v)))
        .map(|index| CanonicalLabel { node: v, index })
        .collect()
}

/// Vertex numbering shared by all lattice-side constructions.
struct Layout {
    labels: Vec<CanonicalLabel>,
    /// Vertex ids introduced at each node.
    new: Vec<Vec<usize>>,
    stages: Vec<Vec<LatticeNodeId>>,
}

impl Layout {
    fn of(l: &CyclicLattice) -> Result<Self, ReconstructError> {
        validate_lattice(l).map_err(ReconstructError::InvalidLattice)?;
        let stages = l.levelize().expect("validated lattices are acyclic");
        let mut labels = Vec::new();
        let mut new = vec![Vec::new(); l.node_count()];
        for &v in stages.iter().flatten() {
            for label in new_vertices(l, v) {
                new[v.0].push(labels.len());
                labels.push(label);
            }
        }
        Ok(Layout { labels, new, stages })
    }

    /// Vertices introduced at nodes strictly below `v`.
    fn strictly_below(&self, l: &CyclicLattice, v: LatticeNodeId) -> Vec<usize> {
        l.down_set(v)
            .into_iter()
            .filter(|&u| u != v)
            .flat_map(|u| self.new[u.0].iter().copied())
            .collect()
    }

    /// All vertices of the cyclic subgroup at `v`.
    fn closure(&self, l: &CyclicLattice, v: LatticeNodeId) -> Vec<usize> {
        l.down_set(v)
            .into_iter()
            .flat_map(|u| self.new[u.0].iter().copied())
            .collect()
    }
}

fn clique_edges(vs: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            edges.push((a, b));
        }
    }
}

fn glue(l: &CyclicLattice, layout: &Layout, stages: usize) -> LabeledGraph {
    let nodes: Vec<LatticeNodeId> = layout.stages.iter().take(stages).flatten().copied().collect();
    let n: usize = nodes.iter().map(|v| layout.new[v.0].len()).sum();
    let mut edges = Vec::new();
    for &v in &nodes {
        clique_edges(&layout.closure(l, v), &mut edges);
    }
    // stage order puts the first `n` vertices exactly on these nodes
    LabeledGraph {
        graph: SimpleGraph::from_edges(n, edges).expect("vertex ids in range"),
        labels: layout.labels[..n].to_vec(),
    }
}

/// Enhanced power graph assembled stage by stage: every node contributes a
/// clique on all vertices of its down-set.
pub fn epow_from_lattice(l: &CyclicLattice) -> Result<LabeledGraph, ReconstructError> {
    let layout = Layout::of(l)?;
    Ok(glue(l, &layout, layout.stages.len()))
}

/// The partial enhanced power graph after stages `0..=stage` only.
pub fn epow_through_stage(l: &CyclicLattice, stage: usize) -> Result<LabeledGraph, ReconstructError> {
    let layout = Layout::of(l)?;
    Ok(glue(l, &layout, stage + 1))
}

/// Power graph: a clique on each node's new vertices, plus every pair
/// joining a node's new vertices to the vertices strictly below it.
pub fn pow_from_lattice(l: &CyclicLattice) -> Result<LabeledGraph, ReconstructError> {
    let layout = Layout::of(l)?;
    let mut edges = Vec::new();
    for v in l.node_ids() {
        let new = &layout.new[v.0];
        clique_edges(new, &mut edges);
        for y in layout.strictly_below(l, v) {
            edges.extend(new.iter().map(|&x| (x, y)));
        }
    }
    Ok(LabeledGraph {
        graph: SimpleGraph::from_edges(layout.labels.len(), edges).expect("vertex ids in range"),
        labels: layout.labels,
    })
}

/// Directed power graph: both arcs inside each node's new vertices, and
/// arcs from them down to every vertex strictly below.
pub fn dirpow_from_lattice(l: &CyclicLattice) -> Result<LabeledDigraph, ReconstructError> {
    let layout = Layout::of(l)?;
    let mut arcs = Vec::new();
    for v in l.node_ids() {
        let new = &layout.new[v.0];
        for &x in new {
            arcs.extend(new.iter().filter(|&&y| y != x).map(|&y| (x, y)));
        }
        for y in layout.strictly_below(l, v) {
            arcs.extend(new.iter().map(|&x| (x, y)));
        }
    }
    Ok(LabeledDigraph {
        graph: Digraph::from_arcs(layout.labels.len(), arcs).expect("vertex ids in range"),
        labels: layout.labels,
    })
}

fn drop_isolated(full: SimpleGraph, labels: &[CanonicalLabel]) -> LabeledGraph {
    let (graph, kept) = full.without_isolated();
    LabeledGraph {
        graph,
        labels: kept.iter().map(|&v| labels[v]).collect(),
    }
}

/// Enhanced power graph edges missing from the power graph, isolated
/// vertices removed.
pub fn diff_from_lattice(l: &CyclicLattice) -> Result<LabeledGraph, ReconstructError> {
    let e = epow_from_lattice(l)?;
    let p = pow_from_lattice(l)?;
    debug_assert_eq!(e.labels, p.labels);
    Ok(drop_isolated(e.graph.edge_difference(&p.graph), &e.labels))
}

/// Difference graph read directly off the lattice: two vertices are joined
/// iff their nodes are incomparable but lie below a common node.
pub fn diff_incomparability(l: &CyclicLattice) -> Result<LabeledGraph, ReconstructError> {
    let layout = Layout::of(l)?;
    let down = l.all_down_bits();
    let n = l.node_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let comparable = down[v].contains(u) || down[u].contains(v);
            let bounded = down.iter().any(|d| d.contains(u) && d.contains(v));
            if !comparable && bounded {
                for &x in &layout.new[u] {
                    edges.extend(layout.new[v].iter().map(|&y| (x, y)));
                }
            }
        }
    }
    let full = SimpleGraph::from_edges(layout.labels.len(), edges).expect("vertex ids in range");
    Ok(drop_isolated(full, &layout.labels))
}

/// Label each element by the node of `<x>` and its 1-based rank among the
/// generators of `<x>` sorted by id.
pub fn oracle_labeling(g: &FiniteGroup, ls: &LatticeWithSubgroups) -> Vec<CanonicalLabel> {
    g.elements()
        .map(|x| {
            let node = ls.node_of(x);
            let gens = &ls.subgroup_of(node).generators;
            let rank = gens.binary_search(&x).expect("x generates <x>");
            CanonicalLabel {
                node,
                index: rank + 1,
            }
        })
        .collect()
}
