//! The four power-type graphs computed directly from the multiplication
//! table. These serve as the oracles every reconstruction is checked against.

use crate::graph::{Digraph, SimpleGraph};
use crate::group::{ElementId, FiniteGroup};

/// Enhanced power graph: `x ~ y` iff both lie in one cyclic subgroup.
pub fn epow_oracle(g: &FiniteGroup) -> SimpleGraph {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for c in g.maximal_cyclic_subgroups() {
        for &x in &c.members {
            for &y in &c.members {
                if x != y {
                    m[x.0][y.0] = true;
                }
            }
        }
    }
    SimpleGraph::from_matrix(&m)
}

/// Directed power graph: arc `x -> y` iff `y` is a power of `x`.
pub fn dirpow_oracle(g: &FiniteGroup) -> Digraph {
    let arcs = g.elements().flat_map(|x| {
        g.powers(x)
            .into_iter()
            .filter(move |&y| y != x)
            .map(move |y| (x.0, y.0))
    });
    Digraph::from_arcs(g.order(), arcs).expect("powers are group elements")
}

/// Power graph: `x ~ y` iff one is a power of the other.
pub fn pow_oracle(g: &FiniteGroup) -> SimpleGraph {
    dirpow_oracle(g).underlying()
}

/// A difference graph together with the element behind each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffGraph {
    pub graph: SimpleGraph,
    pub retained: Vec<ElementId>,
}

/// Edges of the enhanced power graph missing from the power graph, with
/// isolated vertices removed.
pub fn diff_oracle(g: &FiniteGroup) -> DiffGraph {
    let (graph, kept) = epow_oracle(g).edge_difference(&pow_oracle(g)).without_isolated();
    DiffGraph {
        graph,
        retained: kept.into_iter().map(ElementId).collect(),
    }
}
