//! Finite groups, their cyclic subgroup lattices and power-type graphs, with
//! element-free reconstructions between them.

mod bitset;
pub mod catalog;
pub mod clique;
pub mod format;
pub mod graph;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod power;
pub mod reconstruct;
mod union_find;

pub use catalog::{build_group, parse_group_expr, GroupExpr, Limits, NamedGroup};
pub use clique::maximal_cliques;
pub use graph::{Digraph, GraphError, SimpleGraph};
pub use group::{validate_group, CyclicSubgroup, ElementId, FiniteGroup, GroupError};
pub use lattice::{build_lattice, CyclicLattice, LatticeNodeId, LatticeWithSubgroups};
pub use power::{diff_oracle, dirpow_oracle, epow_oracle, pow_oracle, DiffGraph};
pub use iso::{compare_groups, EquivalenceProfile, IsoError, IsoResult};
pub use reconstruct::{
    diff_from_lattice, diff_incomparability, dirpow_from_lattice, epow_from_lattice, lattice_from_epow,
    new_vertices, oracle_labeling, pow_from_lattice, CanonicalLabel, LabeledDigraph, LabeledGraph,
    ReconstructError,
};
