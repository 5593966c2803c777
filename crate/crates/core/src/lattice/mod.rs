//! Order-labeled cyclic subgroup lattices.
//!
//! A [`CyclicLattice`] is a Hasse diagram whose nodes carry the order of the
//! subgroup they stand for. The order labels are part of the data: the plain
//! poset does not determine the graphs (the divisor posets of 12 and 18 are
//! isomorphic, the cyclic groups are not).

pub mod divisors;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::group::{CyclicSubgroup, ElementId, FiniteGroup};
pub use divisors::{divisor_cover_pairs, divisors, totient};
pub use validate::{validate_lattice, LatticeReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeNodeId(pub usize);

impl LatticeNodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for LatticeNodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cover references node {node} but the lattice has {count} nodes")]
    NodeOutOfRange { node: usize, count: usize },
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("invalid lattice: {0}")]
    Invalid(LatticeReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeNode {
    pub id: LatticeNodeId,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicLattice {
    nodes: Vec<LatticeNode>,
    covers: BTreeSet<(LatticeNodeId, LatticeNodeId)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl CyclicLattice {
    /// Assemble a lattice without checking any lattice invariant; only node
    /// references are range-checked. Use [`validate_lattice`] or
    /// [`CyclicLattice::new`] for a checked value.
    pub fn from_parts(
        orders: Vec<usize>,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, LatticeError> {
        let count = orders.len();
        let mut set = BTreeSet::new();
        for (lo, hi) in covers {
            for node in [lo, hi] {
                if node >= count {
                    return Err(LatticeError::NodeOutOfRange { node, count });
                }
            }
            set.insert((LatticeNodeId(lo), LatticeNodeId(hi)));
        }
        let mut lower = vec![Vec::new(); count];
        let mut upper = vec![Vec::new(); count];
        for &(lo, hi) in &set {
            lower[hi.0].push(lo.0);
            upper[lo.0].push(hi.0);
        }
        let nodes = orders
            .into_iter()
            .enumerate()
            .map(|(i, order)| LatticeNode {
                id: LatticeNodeId(i),
                order,
            })
            .collect();
        Ok(CyclicLattice {
            nodes,
            covers: set,
            lower,
            upper,
        })
    }

    /// Assemble and validate.
    pub fn new(
        orders: Vec<usize>,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, LatticeError> {
        let lattice = Self::from_parts(orders, covers)?;
        validate_lattice(&lattice).map_err(LatticeError::Invalid)?;
        Ok(lattice)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn nodes(&self) -> &[LatticeNode] {
        &self.nodes
    }

    pub fn node_ids(&self) -> impl Iterator<Item = LatticeNodeId> {
        (0..self.nodes.len()).map(LatticeNodeId)
    }

    pub fn order(&self, v: LatticeNodeId) -> usize {
        self.nodes[v.0].order
    }

    pub fn covers(&self) -> &BTreeSet<(LatticeNodeId, LatticeNodeId)> {
        &self.covers
    }

    pub fn is_cover(&self, lower: LatticeNodeId, upper: LatticeNodeId) -> bool {
        self.covers.contains(&(lower, upper))
    }

    /// The unique node of order 1, if there is exactly one.
    pub fn bottom(&self) -> Option<LatticeNodeId> {
        let mut ones = self.nodes.iter().filter(|n| n.order == 1);
        match (ones.next(), ones.next()) {
            (Some(n), None) => Some(n.id),
            _ => None,
        }
    }

    /// Immediate lower covers of `v`.
    pub fn predecessors(&self, v: LatticeNodeId) -> BTreeSet<LatticeNodeId> {
        self.lower[v.0].iter().map(|&u| LatticeNodeId(u)).collect()
    }

    /// Immediate upper covers of `v`.
    pub fn successors(&self, v: LatticeNodeId) -> BTreeSet<LatticeNodeId> {
        self.upper[v.0].iter().map(|&u| LatticeNodeId(u)).collect()
    }

    /// All `u <= v` (reflexive-transitive closure of the covers).
    pub fn down_set(&self, v: LatticeNodeId) -> BTreeSet<LatticeNodeId> {
        self.down_bits(v.0).iter().map(LatticeNodeId).collect()
    }

    pub(crate) fn down_bits(&self, v: usize) -> BitSet {
        let mut seen = BitSet::new(self.nodes.len());
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(x) = stack.pop() {
            for &u in &self.lower[x] {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Down-sets of every node, as bitsets.
    pub(crate) fn all_down_bits(&self) -> Vec<BitSet> {
        (0..self.nodes.len()).map(|v| self.down_bits(v)).collect()
    }

    /// Reachability order `u <= v`.
    pub fn leq(&self, u: LatticeNodeId, v: LatticeNodeId) -> bool {
        self.down_bits(v.0).contains(u.0)
    }

    /// Layered topological order: stage 0 holds the minimal nodes (the bottom
    /// for a valid lattice); a node enters the first stage after all of its
    /// predecessors have been placed.
    pub fn levelize(&self) -> Result<Vec<Vec<LatticeNodeId>>, LatticeError> {
        let n = self.nodes.len();
        let mut pending: Vec<usize> = self.lower.iter().map(Vec::len).collect();
        let mut current: Vec<usize> = (0..n).filter(|&v| pending[v] == 0).collect();
        let mut placed = 0;
        let mut stages = Vec::new();
        while !current.is_empty() {
            placed += current.len();
            let mut next = Vec::new();
            for &v in &current {
                for &w in &self.upper[v] {
                    pending[w] -= 1;
                    if pending[w] == 0 {
                        next.push(w);
                    }
                }
            }
            next.sort_unstable();
            stages.push(current.into_iter().map(LatticeNodeId).collect());
            current = next;
        }
        if placed != n {
            return Err(LatticeError::Cyclic);
        }
        Ok(stages)
    }

    /// Node ids in stage order (a topological order of the covers).
    pub fn topological_order(&self) -> Result<Vec<LatticeNodeId>, LatticeError> {
        Ok(self.levelize()?.into_iter().flatten().collect())
    }

    /// Sum of totients of the node orders; equals the group order for a
    /// lattice built from a group.
    pub fn totient_sum(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| if n.order == 0 { 0 } else { divisors::phi(n.order) })
            .sum()
    }

    /// Node orders in id order.
    pub fn orders(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.order).collect()
    }
}

/// A lattice together with the subgroup each node stands for.
#[derive(Clone, Debug)]
pub struct LatticeWithSubgroups {
    pub lattice: CyclicLattice,
    pub subgroups: Vec<CyclicSubgroup>,
    /// Node of `<x>` for each element `x`.
    pub node_of_element: Vec<LatticeNodeId>,
}

impl LatticeWithSubgroups {
    pub fn subgroup_of(&self, v: LatticeNodeId) -> &CyclicSubgroup {
        &self.subgroups[v.0]
    }

    pub fn node_of(&self, x: ElementId) -> LatticeNodeId {
        self.node_of_element[x.0]
    }
}

/// Build the cyclic subgroup lattice of `g`. Nodes are ordered by
/// `(order, sorted member list)`; `H` is covered by `K` iff `H < K` and
/// `|K|/|H|` is prime.
pub fn build_lattice(g: &FiniteGroup) -> LatticeWithSubgroups {
    let subgroups = g.cyclic_subgroups();
    let n = g.order();
    let member_bits: Vec<BitSet> = subgroups
        .iter()
        .map(|s| {
            let mut b = BitSet::new(n);
            for m in &s.members {
                b.insert(m.0);
            }
            b
        })
        .collect();

    let mut covers = Vec::new();
    for (i, h) in subgroups.iter().enumerate() {
        for (j, k) in subgroups.iter().enumerate() {
            if k.order > h.order
                && k.order % h.order == 0
                && divisors::is_prime(k.order / h.order)
                && member_bits[i].is_subset(&member_bits[j])
            {
                covers.push((i, j));
            }
        }
    }

    let mut node_of_element = vec![LatticeNodeId(0); n];
    for (i, s) in subgroups.iter().enumerate() {
        for x in &s.generators {
            node_of_element[x.0] = LatticeNodeId(i);
        }
    }

    let lattice = CyclicLattice::from_parts(subgroups.iter().map(|s| s.order).collect(), covers)
        .expect("cover ids come from the subgroup list");
    LatticeWithSubgroups {
        lattice,
        subgroups,
        node_of_element,
    }
}
