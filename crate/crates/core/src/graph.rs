//! Simple graphs and digraphs over dense vertex ids with sorted,
//! deduplicated adjacency lists.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
}

fn check(u: usize, v: usize, n: usize) -> Result<(), GraphError> {
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                count: n,
            });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

fn normalize(lists: &mut [Vec<usize>]) {
    for l in lists {
        l.sort_unstable();
        l.dedup();
    }
}

/// Undirected graph without loops or multi-edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            adj: (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect(),
        }
    }

    /// Build from an edge list; duplicates and orientation are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check(u, v, n)?;
            adj[u].push(v);
            adj[v].push(u);
        }
        normalize(&mut adj);
        Ok(SimpleGraph { adj })
    }

    /// Build from a symmetric, irreflexive adjacency matrix.
    pub(crate) fn from_matrix(m: &[Vec<bool>]) -> Self {
        let adj = m
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j).collect())
            .collect();
        SimpleGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_spanning_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Edges of `self` not in `other`, over the same vertex set.
    pub fn edge_difference(&self, other: &SimpleGraph) -> SimpleGraph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, l)| l.iter().copied().filter(|&v| !other.has_edge(u, v)).collect())
            .collect();
        SimpleGraph { adj }
    }

    /// Drop isolated vertices; returns the compacted graph and the original
    /// id of each kept vertex.
    pub fn without_isolated(&self) -> (SimpleGraph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&v| self.degree(v) > 0).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| self.adj[v].iter().map(|&w| new_id[w]).collect())
            .collect();
        (SimpleGraph { adj }, kept)
    }

    /// Image under `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (u, l) in self.adj.iter().enumerate() {
            adj[perm[u]] = l.iter().map(|&v| perm[v]).collect();
        }
        normalize(&mut adj);
        SimpleGraph { adj }
    }
}

/// Directed graph without self-arcs or parallel arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            check(u, v, n)?;
            out[u].push(v);
            inn[v].push(u);
        }
        normalize(&mut out);
        normalize(&mut inn);
        Ok(Digraph { out, inn })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out
            .get(u)
            .is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    /// Sorted `(in-degree, out-degree)` pairs.
    pub fn degree_sequence(&self) -> Vec<(usize, usize)> {
        let mut d: Vec<(usize, usize)> = (0..self.vertex_count())
            .map(|v| (self.inn[v].len(), self.out[v].len()))
            .collect();
        d.sort_unstable();
        d
    }

    /// Forget orientation, merging antiparallel arcs.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertex_count(), self.arcs()).expect("arcs are valid")
    }

    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        Digraph::from_arcs(self.vertex_count(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation of valid arcs")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1) && !g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.degree_sequence(), vec![0, 1, 1, 2]);
        let (h, kept) = g.without_isolated();
        assert_eq!((h.vertex_count(), kept), (3, vec![0, 1, 2]));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            SimpleGraph::from_edges(2, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, count: 2 })
        ));
    }

    #[test]
    fn complete_and_difference() {
        let k = SimpleGraph::complete(5);
        assert_eq!(k.edge_count(), 10);
        assert!(k.is_complete());
        let p = SimpleGraph::from_edges(5, [(0, 1), (1, 2)]).unwrap();
        assert!(p.is_spanning_subgraph_of(&k));
        assert_eq!(k.edge_difference(&p).edge_count(), 8);
        assert!(SimpleGraph::empty(1).is_complete());
    }

    #[test]
    fn digraph_basics() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (2, 0), (2, 0)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.in_neighbors(0), &[1, 2]);
        assert_eq!(d.degree_sequence(), vec![(0, 1), (1, 1), (2, 1)]);
        assert_eq!(d.underlying().edge_count(), 2);
        let p = d.permuted(&[2, 0, 1]);
        assert!(p.has_arc(2, 0) && p.has_arc(0, 2) && p.has_arc(1, 2));
    }
}
