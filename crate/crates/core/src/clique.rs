//! Maximal clique enumeration (Bron–Kerbosch with pivoting).

use crate::bitset::BitSet;
use crate::graph::SimpleGraph;

/// All inclusion-maximal cliques, each sorted, listed by size descending
/// and then lexicographically. An empty graph has no cliques.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let nbrs: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut b = BitSet::new(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut all = BitSet::new(n);
    for v in 0..n {
        all.insert(v);
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(&nbrs, &mut r, all, BitSet::new(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

fn expand(nbrs: &[BitSet], r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)| over P ∪ X
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection(&nbrs[u]).count())
        .expect("P is non-empty");
    let candidates: Vec<usize> = p.difference(&nbrs[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        expand(nbrs, r, p.intersection(&nbrs[v]), x.intersection(&nbrs[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_is_one_clique() {
        assert_eq!(maximal_cliques(&SimpleGraph::complete(5)), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(maximal_cliques(&SimpleGraph::empty(1)), vec![vec![0]]);
        assert!(maximal_cliques(&SimpleGraph::empty(0)).is_empty());
    }

    #[test]
    fn canonical_order() {
        // triangle 2-3-4, edge 0-1, isolated 5
        let g = SimpleGraph::from_edges(6, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(maximal_cliques(&g), vec![vec![2, 3, 4], vec![0, 1], vec![5]]);
    }

    #[test]
    fn group_cliques_are_maximal_cyclic_subgroups() {
        use crate::catalog::{group_from_str, Limits};
        use crate::power::epow_oracle;

        let g = group_from_str("Z(2)xZ(6)", &Limits::default()).unwrap();
        let cl = maximal_cliques(&epow_oracle(&g));
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.len() == 6));
        for i in 0..3 {
            for j in i + 1..3 {
                assert_eq!(cl[i].iter().filter(|v| cl[j].contains(v)).count(), 3);
            }
        }

        for expr in ["S(4)", "Z(2)xZ(6)", "D(12)", "Q(8)xZ(2)", "A(5)"] {
            let g = group_from_str(expr, &Limits::default()).unwrap();
            let mut want: Vec<Vec<usize>> = g
                .maximal_cyclic_subgroups()
                .iter()
                .map(|c| c.members.iter().map(|x| x.0).collect())
                .collect();
            want.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
            assert_eq!(maximal_cliques(&epow_oracle(&g)), want, "{expr}");
        }
        let s4 = group_from_str("S(4)", &Limits::default()).unwrap();
        let sizes: Vec<usize> = maximal_cliques(&epow_oracle(&s4)).iter().map(Vec::len).collect();
        assert_eq!(sizes, [vec![4; 3], vec![3; 4], vec![2; 6]].concat());
    }

    fn brute_force(g: &SimpleGraph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let is_clique = |m: u32| {
            (0..n).all(|u| (0..n).all(|v| u == v || m >> u & 1 == 0 || m >> v & 1 == 0 || g.has_edge(u, v)))
        };
        let mut out: Vec<Vec<usize>> = (1u32..1 << n)
            .filter(|&m| is_clique(m) && (0..n).all(|w| m >> w & 1 == 1 || !is_clique(m | 1 << w)))
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        out.sort_by(|a: &Vec<usize>, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }

    proptest! {
        #[test]
        fn agrees_with_subset_enumeration(
            n in 1usize..11,
            edges in prop::collection::vec((0usize..11, 0usize..11), 0..40),
        ) {
            let g = SimpleGraph::from_edges(
                n,
                edges.into_iter().filter(|&(a, b)| a < n && b < n && a != b),
            ).unwrap();
            prop_assert_eq!(maximal_cliques(&g), brute_force(&g));
        }
    }
}
