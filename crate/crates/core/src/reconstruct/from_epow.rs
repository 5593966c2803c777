//! Recover the order-labeled cyclic subgroup lattice from an unlabeled
//! enhanced power graph.
//!
//! Each maximal clique is a maximal cyclic subgroup, so it contributes one
//! candidate node per divisor of its size. Two cliques meeting in `r`
//! vertices share their subgroups of every order dividing `r`; merging those
//! candidates with union-find yields the nodes, and each clique's divisor
//! poset supplies the covers.

use std::collections::BTreeSet;

use super::{epow_from_lattice, ReconstructError};
use crate::clique::maximal_cliques;
use crate::graph::SimpleGraph;
use crate::iso::{graph_isomorphism_with_budget, DEFAULT_BUDGET};
use crate::lattice::divisors::{divisor_cover_pairs, divisors, phi};
use crate::lattice::{validate_lattice, CyclicLattice};
use crate::union_find::UnionFind;

fn reject(msg: String) -> ReconstructError {
    ReconstructError::NotAnEnhancedPowerGraph(msg)
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut r) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                r += 1;
                i += 1;
                j += 1;
            }
        }
    }
    r
}

/// Rebuild the lattice from the adjacency structure alone.
///
/// Inputs that cannot be an enhanced power graph are rejected with a
/// diagnosis. Besides the structural checks, the lattice found is used to
/// regenerate a graph, which must be isomorphic to the input.
pub fn lattice_from_epow(g: &SimpleGraph) -> Result<CyclicLattice, ReconstructError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(reject("graph has no vertices".into()));
    }
    let cliques = maximal_cliques(g);
    let sizes: Vec<usize> = cliques.iter().map(Vec::len).collect();

    // one union-find slot per (clique, divisor of its size)
    let divs: Vec<Vec<usize>> = sizes.iter().map(|&s| divisors(s)).collect();
    let mut offset = vec![0; cliques.len() + 1];
    for (i, d) in divs.iter().enumerate() {
        offset[i + 1] = offset[i] + d.len();
    }
    let slot = |c: usize, d: usize| offset[c] + divs[c].binary_search(&d).expect("divisor of clique size");
    let mut uf = UnionFind::new(offset[cliques.len()]);

    let mut meets = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let r = intersection_size(&cliques[i], &cliques[j]);
            if r == 0 {
                return Err(reject(format!("maximal cliques {i} and {j} are disjoint")));
            }
            if sizes[i] % r != 0 || sizes[j] % r != 0 {
                return Err(reject(format!(
                    "maximal cliques {i} and {j} (sizes {}, {}) meet in {r} vertices, which does not divide both sizes",
                    sizes[i], sizes[j]
                )));
            }
            for d in divisors(r) {
                uf.union(slot(i, d), slot(j, d));
            }
            meets.push((i, j, r));
        }
    }

    let (class_of, count) = uf.classes();
    let mut order = vec![0; count];
    for (c, ds) in divs.iter().enumerate() {
        for &d in ds {
            let k = class_of[slot(c, d)];
            if order[k] != 0 && order[k] != d {
                return Err(reject(format!(
                    "identified subgroups have orders {} and {d}",
                    order[k]
                )));
            }
            order[k] = d;
        }
    }

    // identification must not glue more than the shared subgroup
    for &(i, j, r) in &meets {
        let largest = divs[i]
            .iter()
            .copied()
            .filter(|&d| sizes[j] % d == 0 && class_of[slot(i, d)] == class_of[slot(j, d)])
            .max()
            .unwrap_or(0);
        if largest != r {
            return Err(reject(format!(
                "maximal cliques {i} and {j} meet in {r} vertices but share a subgroup of order {largest}"
            )));
        }
    }

    let accounted: usize = order.iter().map(|&d| phi(d)).sum();
    if accounted != n {
        return Err(reject(format!(
            "generator count {accounted} differs from vertex count {n}"
        )));
    }
    if let Some(&d) = order.iter().find(|&&d| n % d != 0) {
        return Err(reject(format!(
            "subgroup order {d} does not divide the vertex count {n}"
        )));
    }

    // canonical node numbering: by order, then by first (clique, divisor) slot
    let mut first_slot = vec![usize::MAX; count];
    for (s, &k) in class_of.iter().enumerate() {
        first_slot[k] = first_slot[k].min(s);
    }
    let mut perm: Vec<usize> = (0..count).collect();
    perm.sort_by_key(|&k| (order[k], first_slot[k]));
    let mut node_of = vec![0; count];
    for (new, &k) in perm.iter().enumerate() {
        node_of[k] = new;
    }

    let mut covers = BTreeSet::new();
    for (c, &s) in sizes.iter().enumerate() {
        for (d, e) in divisor_cover_pairs(s) {
            covers.insert((node_of[class_of[slot(c, d)]], node_of[class_of[slot(c, e)]]));
        }
    }
    let lattice = CyclicLattice::from_parts(perm.iter().map(|&k| order[k]).collect(), covers)
        .expect("cover ids are class indices");
    validate_lattice(&lattice).map_err(|r| reject(format!("recovered lattice is invalid: {r}")))?;

    let rebuilt = epow_from_lattice(&lattice)?;
    if !graph_isomorphism_with_budget(&rebuilt.graph, g, DEFAULT_BUDGET)?.found {
        return Err(reject(
            "the graph regenerated from the recovered lattice differs from the input".into(),
        ));
    }
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_from_str, Limits};
    use crate::iso::labeled_lattice_isomorphism;
    use crate::lattice::build_lattice;
    use crate::power::epow_oracle;

    fn rejected(g: &SimpleGraph) -> bool {
        matches!(lattice_from_epow(g), Err(ReconstructError::NotAnEnhancedPowerGraph(_)))
    }

    #[test]
    fn c2xc6() {
        let g = group_from_str("Z(2)xZ(6)", &Limits::default()).unwrap();
        let l = lattice_from_epow(&epow_oracle(&g)).unwrap();
        assert_eq!(l.orders(), vec![1, 2, 2, 2, 3, 6, 6, 6]);
        assert_eq!(l.cover_count(), 10);
        assert!(labeled_lattice_isomorphism(&l, &build_lattice(&g).lattice).unwrap().found);
    }

    #[test]
    fn small_graphs() {
        let k5 = lattice_from_epow(&SimpleGraph::complete(5)).unwrap();
        assert_eq!((k5.orders(), k5.cover_count()), (vec![1, 5], 1));
        let k1 = lattice_from_epow(&SimpleGraph::empty(1)).unwrap();
        assert_eq!((k1.node_count(), k1.cover_count()), (1, 0));
    }

    #[test]
    fn rejects_non_enhanced_power_graphs() {
        let p3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k4e = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(rejected(&p3));
        assert!(rejected(&c4));
        assert!(rejected(&k4e));
        assert!(rejected(&SimpleGraph::empty(0)));
        assert!(rejected(&SimpleGraph::empty(2)));
    }
}
