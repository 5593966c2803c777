//! Isomorphism of simple graphs, digraphs and order-labeled lattices.
//!
//! All structures go through one engine for vertex-colored digraphs. Twin
//! classes (vertices with identical closed or open neighborhoods) are first
//! collapsed to single colored vertices, then the quotients are matched by
//! joint color refinement with individualization and backtracking. A mapping
//! is reported only after it has been checked arc by arc on the original
//! structures.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::catalog::NamedGroup;
use crate::graph::{Digraph, SimpleGraph};
use crate::group::FiniteGroup;
use crate::lattice::{build_lattice, CyclicLattice};
use crate::power::{diff_oracle, dirpow_oracle, epow_oracle, pow_oracle};

/// Default number of search-node expansions before giving up.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("isomorphism search exceeded its budget of {budget} expansions")]
    Timeout { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub found: bool,
    /// `mapping[v]` is the image of vertex `v` of the first structure.
    pub mapping: Option<Vec<usize>>,
}

impl IsoResult {
    fn none() -> Self {
        IsoResult {
            found: false,
            mapping: None,
        }
    }
}

/// A vertex-colored digraph as seen by the engine. Undirected graphs store
/// each edge in both directions.
#[derive(Clone, Debug)]
struct Structure {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    directed: bool,
}

impl Structure {
    fn from_graph(g: &SimpleGraph) -> Self {
        let out: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
        Structure {
            inn: out.clone(),
            out,
            directed: false,
        }
    }

    fn from_digraph(d: &Digraph) -> Self {
        let n = d.vertex_count();
        Structure {
            out: (0..n).map(|v| d.out_neighbors(v).to_vec()).collect(),
            inn: (0..n).map(|v| d.in_neighbors(v).to_vec()).collect(),
            directed: true,
        }
    }

    fn len(&self) -> usize {
        self.out.len()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}

/// Twin classes and the colored quotient built from them.
struct Reduced {
    quotient: Structure,
    /// Per quotient vertex: (input color, twin kind, class size).
    key: Vec<(usize, u8, usize)>,
    members: Vec<Vec<usize>>,
}

fn with_self(list: &[usize], v: usize) -> Vec<usize> {
    let mut l = list.to_vec();
    if let Err(pos) = l.binary_search(&v) {
        l.insert(pos, v);
    }
    l
}

fn reduce(s: &Structure, color: &[usize]) -> Reduced {
    const SINGLE: u8 = 0;
    const CLOSED: u8 = 1;
    const OPEN: u8 = 2;
    let n = s.len();
    let mut closed: HashMap<(usize, Vec<usize>, Vec<usize>), Vec<usize>> = HashMap::new();
    for v in 0..n {
        closed
            .entry((color[v], with_self(&s.out[v], v), with_self(&s.inn[v], v)))
            .or_default()
            .push(v);
    }
    let mut classes: Vec<(u8, Vec<usize>)> = Vec::new();
    let mut singles = Vec::new();
    for (_, members) in closed {
        if members.len() > 1 {
            classes.push((CLOSED, members));
        } else {
            singles.push(members[0]);
        }
    }
    let mut open: HashMap<(usize, &[usize], &[usize]), Vec<usize>> = HashMap::new();
    for &v in &singles {
        open.entry((color[v], &s.out[v], &s.inn[v])).or_default().push(v);
    }
    for (_, members) in open {
        let kind = if members.len() > 1 { OPEN } else { SINGLE };
        classes.push((kind, members));
    }
    for c in &mut classes {
        c.1.sort_unstable();
    }
    classes.sort_by(|a, b| a.1[0].cmp(&b.1[0]));

    let mut class_of = vec![0; n];
    for (i, (_, members)) in classes.iter().enumerate() {
        for &v in members {
            class_of[v] = i;
        }
    }
    let q = classes.len();
    let mut out = vec![Vec::new(); q];
    let mut inn = vec![Vec::new(); q];
    for (i, (_, members)) in classes.iter().enumerate() {
        let rep = members[0];
        for &w in &s.out[rep] {
            let j = class_of[w];
            if j != i {
                out[i].push(j);
                inn[j].push(i);
            }
        }
    }
    for l in out.iter_mut().chain(inn.iter_mut()) {
        l.sort_unstable();
        l.dedup();
    }
    Reduced {
        quotient: Structure {
            out,
            inn,
            directed: s.directed,
        },
        key: classes.iter().map(|(k, m)| (color[m[0]], *k, m.len())).collect(),
        members: classes.into_iter().map(|(_, m)| m).collect(),
    }
}

/// Dense joint ranks of two color lists.
fn rank_jointly<T: Ord + Clone>(a: &[T], b: &[T]) -> (Vec<usize>, Vec<usize>) {
    let mut all: Vec<T> = a.iter().chain(b).cloned().collect();
    all.sort();
    all.dedup();
    let rank = |x: &T| all.binary_search(x).expect("present");
    (a.iter().map(rank).collect(), b.iter().map(rank).collect())
}

/// Refinement search over the disjoint union of two quotients.
struct Search<'a> {
    a: &'a Structure,
    b: &'a Structure,
    budget: u64,
    expansions: u64,
}

impl Search<'_> {
    fn total(&self) -> usize {
        self.a.len() + self.b.len()
    }

    fn side(&self, v: usize) -> (&Structure, usize, usize) {
        let na = self.a.len();
        if v < na {
            (self.a, v, 0)
        } else {
            (self.b, v - na, na)
        }
    }

    fn balanced(&self, colors: &[usize], count: usize) -> bool {
        let na = self.a.len();
        let mut diff = vec![0i64; count];
        for (v, &c) in colors.iter().enumerate() {
            diff[c] += if v < na { 1 } else { -1 };
        }
        diff.iter().all(|&d| d == 0)
    }

    /// Refine to the coarsest equitable coloring; `None` if the two sides
    /// become unbalanced.
    fn refine(&self, mut colors: Vec<usize>) -> Option<Vec<usize>> {
        let mut count = colors.iter().max().map_or(0, |m| m + 1);
        loop {
            if !self.balanced(&colors, count) {
                return None;
            }
            let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..self.total())
                .map(|v| {
                    let (s, local, off) = self.side(v);
                    let mut outs: Vec<usize> = s.out[local].iter().map(|&w| colors[w + off]).collect();
                    outs.sort_unstable();
                    let ins = if s.directed {
                        let mut ins: Vec<usize> = s.inn[local].iter().map(|&w| colors[w + off]).collect();
                        ins.sort_unstable();
                        ins
                    } else {
                        Vec::new()
                    };
                    (colors[v], outs, ins)
                })
                .collect();
            let mut index: BTreeMap<&(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
            for s in &sigs {
                index.insert(s, 0);
            }
            for (i, slot) in index.values_mut().enumerate() {
                *slot = i;
            }
            let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
            let next_count = index.len();
            if next_count == count {
                return Some(colors);
            }
            colors = next;
            count = next_count;
        }
    }

    fn run(&mut self, colors: Vec<usize>) -> Result<Option<Vec<usize>>, IsoError> {
        let Some(colors) = self.refine(colors) else {
            return Ok(None);
        };
        let na = self.a.len();
        let count = colors.iter().max().map_or(0, |m| m + 1);
        let mut size = vec![0usize; count];
        for &c in &colors[..na] {
            size[c] += 1;
        }
        let target = (0..count)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            let mut image = vec![usize::MAX; count];
            for v in na..self.total() {
                image[colors[v]] = v - na;
            }
            let mapping: Vec<usize> = colors[..na].iter().map(|&c| image[c]).collect();
            return Ok(preserves(self.a, self.b, &mapping).then_some(mapping));
        };
        let a = (0..na).find(|&v| colors[v] == target).expect("non-empty cell");
        for b in (na..self.total()).filter(|&v| colors[v] == target) {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(IsoError::Timeout { budget: self.budget });
            }
            let mut next = colors.clone();
            next[a] = count;
            next[b] = count;
            if let Some(m) = self.run(next)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }
}

/// Whether `mapping` is a bijection carrying the arcs of `a` exactly onto
/// the arcs of `b`.
fn preserves(a: &Structure, b: &Structure, mapping: &[usize]) -> bool {
    if a.len() != b.len() || mapping.len() != a.len() || a.arc_count() != b.arc_count() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &m in mapping {
        if m >= b.len() || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..a.len()).all(|u| a.out[u].iter().all(|&v| b.has_arc(mapping[u], mapping[v])))
}

fn isomorphism(
    a: &Structure,
    ca: &[usize],
    b: &Structure,
    cb: &[usize],
    budget: u64,
) -> Result<IsoResult, IsoError> {
    if a.len() != b.len() || a.arc_count() != b.arc_count() {
        return Ok(IsoResult::none());
    }
    let (ca, cb) = rank_jointly(ca, cb);
    let ra = reduce(a, &ca);
    let rb = reduce(b, &cb);
    if ra.members.len() != rb.members.len() {
        return Ok(IsoResult::none());
    }
    let (qa, qb) = rank_jointly(&ra.key, &rb.key);
    let mut search = Search {
        a: &ra.quotient,
        b: &rb.quotient,
        budget,
        expansions: 0,
    };
    let start: Vec<usize> = qa.into_iter().chain(qb).collect();
    let Some(qmap) = search.run(start)? else {
        return Ok(IsoResult::none());
    };
    let mut mapping = vec![usize::MAX; a.len()];
    for (i, members) in ra.members.iter().enumerate() {
        for (&x, &y) in members.iter().zip(&rb.members[qmap[i]]) {
            mapping[x] = y;
        }
    }
    let colors_kept = (0..a.len()).all(|v| ca[v] == cb[mapping[v]]);
    if colors_kept && preserves(a, b, &mapping) {
        Ok(IsoResult {
            found: true,
            mapping: Some(mapping),
        })
    } else {
        // the lifted map must preserve everything; reaching here is a bug
        unreachable!("lifted isomorphism failed verification")
    }
}

pub fn graph_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<IsoResult, IsoError> {
    graph_isomorphism_with_budget(g1, g2, DEFAULT_BUDGET)
}

pub fn graph_isomorphism_with_budget(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    budget: u64,
) -> Result<IsoResult, IsoError> {
    colored_graph_isomorphism(g1, &vec![0; g1.vertex_count()], g2, &vec![0; g2.vertex_count()], budget)
}

/// Isomorphism that must send each vertex to one of the same color.
pub fn colored_graph_isomorphism(
    g1: &SimpleGraph,
    c1: &[usize],
    g2: &SimpleGraph,
    c2: &[usize],
    budget: u64,
) -> Result<IsoResult, IsoError> {
    isomorphism(&Structure::from_graph(g1), c1, &Structure::from_graph(g2), c2, budget)
}

pub fn digraph_isomorphism(d1: &Digraph, d2: &Digraph) -> Result<IsoResult, IsoError> {
    digraph_isomorphism_with_budget(d1, d2, DEFAULT_BUDGET)
}

pub fn digraph_isomorphism_with_budget(
    d1: &Digraph,
    d2: &Digraph,
    budget: u64,
) -> Result<IsoResult, IsoError> {
    colored_digraph_isomorphism(d1, &vec![0; d1.vertex_count()], d2, &vec![0; d2.vertex_count()], budget)
}

pub fn colored_digraph_isomorphism(
    d1: &Digraph,
    c1: &[usize],
    d2: &Digraph,
    c2: &[usize],
    budget: u64,
) -> Result<IsoResult, IsoError> {
    isomorphism(&Structure::from_digraph(d1), c1, &Structure::from_digraph(d2), c2, budget)
}

fn cover_digraph(l: &CyclicLattice) -> Digraph {
    Digraph::from_arcs(l.node_count(), l.covers().iter().map(|(a, b)| (a.0, b.0)))
        .expect("covers of a well-formed lattice")
}

/// Node bijection preserving covers and node orders.
pub fn labeled_lattice_isomorphism(l1: &CyclicLattice, l2: &CyclicLattice) -> Result<IsoResult, IsoError> {
    labeled_lattice_isomorphism_with_budget(l1, l2, DEFAULT_BUDGET)
}

pub fn labeled_lattice_isomorphism_with_budget(
    l1: &CyclicLattice,
    l2: &CyclicLattice,
    budget: u64,
) -> Result<IsoResult, IsoError> {
    colored_digraph_isomorphism(&cover_digraph(l1), &l1.orders(), &cover_digraph(l2), &l2.orders(), budget)
}

/// Node bijection preserving covers only.
pub fn poset_isomorphism(l1: &CyclicLattice, l2: &CyclicLattice) -> Result<IsoResult, IsoError> {
    digraph_isomorphism(&cover_digraph(l1), &cover_digraph(l2))
}

/// Which of the four equivalent structures agree for a pair of groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceProfile {
    pub lattice_iso: bool,
    pub dirpow_iso: bool,
    pub epow_iso: bool,
    pub pow_iso: bool,
}

impl EquivalenceProfile {
    pub fn flags(&self) -> [bool; 4] {
        [self.lattice_iso, self.dirpow_iso, self.epow_iso, self.pow_iso]
    }

    /// All four flags agree.
    pub fn is_consistent(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

pub fn compare_groups(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<EquivalenceProfile, IsoError> {
    compare_groups_with_budget(g1, g2, DEFAULT_BUDGET)
}

pub fn compare_groups_with_budget(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    budget: u64,
) -> Result<EquivalenceProfile, IsoError> {
    let l1 = build_lattice(g1).lattice;
    let l2 = build_lattice(g2).lattice;
    Ok(EquivalenceProfile {
        lattice_iso: labeled_lattice_isomorphism_with_budget(&l1, &l2, budget)?.found,
        dirpow_iso: digraph_isomorphism_with_budget(&dirpow_oracle(g1), &dirpow_oracle(g2), budget)?.found,
        epow_iso: graph_isomorphism_with_budget(&epow_oracle(g1), &epow_oracle(g2), budget)?.found,
        pow_iso: graph_isomorphism_with_budget(&pow_oracle(g1), &pow_oracle(g2), budget)?.found,
    })
}

/// Structure compared by a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusKind {
    Epow,
    Pow,
    Dirpow,
    Diff,
    Lattice,
}

impl CensusKind {
    pub fn name(self) -> &'static str {
        match self {
            CensusKind::Epow => "epow",
            CensusKind::Pow => "pow",
            CensusKind::Dirpow => "dirpow",
            CensusKind::Diff => "diff",
            CensusKind::Lattice => "lattice",
        }
    }
}

/// Isomorphism classes of one structure over a list of groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// Indices into the input list; classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
}

enum Built {
    Graph(SimpleGraph),
    Digraph(Digraph, Vec<usize>),
}

impl Built {
    fn of(g: &FiniteGroup, kind: CensusKind) -> Built {
        match kind {
            CensusKind::Epow => Built::Graph(epow_oracle(g)),
            CensusKind::Pow => Built::Graph(pow_oracle(g)),
            CensusKind::Diff => Built::Graph(diff_oracle(g).graph),
            CensusKind::Dirpow => {
                let d = dirpow_oracle(g);
                let c = vec![0; d.vertex_count()];
                Built::Digraph(d, c)
            }
            CensusKind::Lattice => {
                let l = build_lattice(g).lattice;
                Built::Digraph(cover_digraph(&l), l.orders())
            }
        }
    }

    /// Isomorphism-invariant bucket key.
    fn fingerprint(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let profile = |n: usize, out: &dyn Fn(usize) -> Vec<usize>, inn: &dyn Fn(usize) -> usize, c: &dyn Fn(usize) -> usize| {
            let mut p: Vec<(usize, usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nd: Vec<usize> = out(v).iter().map(|&w| out(w).len()).collect();
                    nd.sort_unstable();
                    nd.insert(0, inn(v));
                    (c(v), out(v).len(), nd)
                })
                .collect();
            p.sort();
            p
        };
        match self {
            Built::Graph(g) => profile(
                g.vertex_count(),
                &|v| g.neighbors(v).to_vec(),
                &|_| 0,
                &|_| 0,
            ),
            Built::Digraph(d, c) => profile(
                d.vertex_count(),
                &|v| d.out_neighbors(v).to_vec(),
                &|v| d.in_neighbors(v).len(),
                &|v| c[v],
            ),
        }
    }

    fn isomorphic(&self, other: &Built, budget: u64) -> Result<bool, IsoError> {
        let r = match (self, other) {
            (Built::Graph(a), Built::Graph(b)) => graph_isomorphism_with_budget(a, b, budget)?,
            (Built::Digraph(a, ca), Built::Digraph(b, cb)) => {
                colored_digraph_isomorphism(a, ca, b, cb, budget)?
            }
            _ => IsoResult::none(),
        };
        Ok(r.found)
    }
}

/// Classify groups by isomorphism of the chosen structure. Groups are first
/// bucketed by an invariant fingerprint; searches run only within buckets.
pub fn census(groups: &[NamedGroup], kind: CensusKind, budget: u64) -> Result<Census, IsoError> {
    let built: Vec<Built> = groups.iter().map(|g| Built::of(g, kind)).collect();
    let mut buckets: BTreeMap<Vec<(usize, usize, Vec<usize>)>, Vec<usize>> = BTreeMap::new();
    for (i, b) in built.iter().enumerate() {
        buckets.entry(b.fingerprint()).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for members in buckets.values() {
        let mut local: Vec<Vec<usize>> = Vec::new();
        for &i in members {
            let mut placed = false;
            for class in local.iter_mut() {
                if built[class[0]].isomorphic(&built[i], budget)? {
                    class.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                local.push(vec![i]);
            }
        }
        classes.extend(local);
    }
    classes.sort();
    Ok(Census { classes })
}
