//! Comparison of lattice-side reconstructions with the group oracles.
//!
//! A reconstruction matches an oracle when some bijection keeps every
//! vertex on its lattice node (permuting generator indices freely) and maps
//! edges onto edges. Such a bijection is searched for as a colored
//! isomorphism with the node id as color.

use super::{
    diff_from_lattice, diff_incomparability, dirpow_from_lattice, epow_from_lattice,
    lattice_from_epow, oracle_labeling, pow_from_lattice, CanonicalLabel, LabeledDigraph,
    LabeledGraph, ReconstructError,
};
use crate::group::FiniteGroup;
use crate::iso::{
    colored_digraph_isomorphism, colored_graph_isomorphism, labeled_lattice_isomorphism_with_budget,
    IsoError,
};
use crate::lattice::{build_lattice, LatticeWithSubgroups};
use crate::power::{diff_oracle, dirpow_oracle, epow_oracle, pow_oracle};

/// Node-preserving equivalence of two labeled graphs.
pub fn labeled_equivalent(a: &LabeledGraph, b: &LabeledGraph, budget: u64) -> Result<bool, IsoError> {
    Ok(colored_graph_isomorphism(&a.graph, &a.node_colors(), &b.graph, &b.node_colors(), budget)?.found)
}

pub fn labeled_equivalent_directed(
    a: &LabeledDigraph,
    b: &LabeledDigraph,
    budget: u64,
) -> Result<bool, IsoError> {
    Ok(colored_digraph_isomorphism(&a.graph, &a.node_colors(), &b.graph, &b.node_colors(), budget)?.found)
}

/// Whether vertices on the same node have identical neighborhoods apart
/// from each other, so that any index permutation is an automorphism.
pub fn same_node_twins(g: &LabeledGraph) -> bool {
    let n = g.graph.vertex_count();
    (0..n).all(|x| {
        (x + 1..n)
            .filter(|&y| g.labels[x].node == g.labels[y].node)
            .all(|y| {
                let strip = |v: usize, other: usize| -> Vec<usize> {
                    g.graph.neighbors(v).iter().copied().filter(|&w| w != other).collect()
                };
                strip(x, y) == strip(y, x)
            })
    })
}

fn relabel(ls: &LatticeWithSubgroups, g: &FiniteGroup) -> Vec<CanonicalLabel> {
    oracle_labeling(g, ls)
}

pub fn oracle_labeled_epow(g: &FiniteGroup, ls: &LatticeWithSubgroups) -> LabeledGraph {
    LabeledGraph {
        graph: epow_oracle(g),
        labels: relabel(ls, g),
    }
}

pub fn oracle_labeled_pow(g: &FiniteGroup, ls: &LatticeWithSubgroups) -> LabeledGraph {
    LabeledGraph {
        graph: pow_oracle(g),
        labels: relabel(ls, g),
    }
}

pub fn oracle_labeled_dirpow(g: &FiniteGroup, ls: &LatticeWithSubgroups) -> LabeledDigraph {
    LabeledDigraph {
        graph: dirpow_oracle(g),
        labels: relabel(ls, g),
    }
}

pub fn oracle_labeled_diff(g: &FiniteGroup, ls: &LatticeWithSubgroups) -> LabeledGraph {
    let labels = relabel(ls, g);
    let d = diff_oracle(g);
    LabeledGraph {
        labels: d.retained.iter().map(|x| labels[x.0]).collect(),
        graph: d.graph,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the five reconstruction checks for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub checks: Vec<CheckOutcome>,
}

impl RoundTripReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.checks.len()
    }
}

fn outcome(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Run every reconstruction for `g` and compare it with the oracle.
pub fn roundtrip(g: &FiniteGroup, budget: u64) -> Result<RoundTripReport, ReconstructError> {
    let ls = build_lattice(g);
    let l = &ls.lattice;
    let mut checks = Vec::new();

    let epow = epow_oracle(g);
    let recovered = match lattice_from_epow(&epow) {
        Ok(r) => {
            let iso = labeled_lattice_isomorphism_with_budget(&r, l, budget)?.found;
            outcome(
                "lattice-from-epow",
                iso,
                format!("nodes={} covers={}", r.node_count(), r.cover_count()),
            )
        }
        Err(ReconstructError::Timeout(t)) => return Err(t.into()),
        Err(e) => outcome("lattice-from-epow", false, e.to_string()),
    };
    checks.push(recovered);

    let e = epow_from_lattice(l)?;
    let ok = labeled_equivalent(&e, &oracle_labeled_epow(g, &ls), budget)? && same_node_twins(&e);
    checks.push(outcome(
        "epow-from-lattice",
        ok,
        format!("vertices={} edges={}", e.graph.vertex_count(), e.graph.edge_count()),
    ));

    let p = pow_from_lattice(l)?;
    let ok = labeled_equivalent(&p, &oracle_labeled_pow(g, &ls), budget)?;
    checks.push(outcome(
        "pow-from-lattice",
        ok,
        format!("vertices={} edges={}", p.graph.vertex_count(), p.graph.edge_count()),
    ));

    let d = dirpow_from_lattice(l)?;
    let ok = labeled_equivalent_directed(&d, &oracle_labeled_dirpow(g, &ls), budget)?;
    checks.push(outcome(
        "dirpow-from-lattice",
        ok,
        format!("vertices={} arcs={}", d.graph.vertex_count(), d.graph.arc_count()),
    ));

    let diff = diff_from_lattice(l)?;
    let ok = labeled_equivalent(&diff, &oracle_labeled_diff(g, &ls), budget)?
        && diff == diff_incomparability(l)?;
    checks.push(outcome(
        "diff-from-lattice",
        ok,
        format!("vertices={} edges={}", diff.graph.vertex_count(), diff.graph.edge_count()),
    ));

    Ok(RoundTripReport { checks })
}
