//! Finite groups given by Cayley tables.
//!
//! Elements are opaque indices `0..n`. The table is the only source of
//! algebraic truth; everything else (orders, cyclic subgroups, statistics)
//! is derived from it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on group order, also the cap for the cubic associativity check.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table not closed: entry ({row}, {col}) = {value} is outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    // row-major n*n
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// A cyclic subgroup: its member set and its generators, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicSubgroup {
    pub order: usize,
    pub members: Vec<ElementId>,
    pub generators: Vec<ElementId>,
}

impl CyclicSubgroup {
    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &CyclicSubgroup) -> bool {
        self.order <= other.order && self.members.iter().all(|&m| other.contains(m))
    }
}

/// Validate a square table with the default order cap.
pub fn validate_group(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    validate_group_with_cap(table, DEFAULT_MAX_ORDER)
}

/// Validate closure, identity, inverses and associativity (full triple loop).
pub fn validate_group_with_cap(table: &[Vec<usize>], cap: usize) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::EmptyTable);
    }
    if n > cap {
        return Err(GroupError::TooLarge { order: n, cap });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(GroupError::NotSquare {
                row,
                len: entries.len(),
                expected: n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(GroupError::NotClosed {
                    row,
                    col,
                    value,
                    order: n,
                });
            }
            flat.push(value);
        }
    }
    FiniteGroup::from_flat(n, flat)
}

impl FiniteGroup {
    /// Build from a row-major table of length `n*n`, checking every axiom.
    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), n * n);
        let at = |x: usize, y: usize| table[x * n + y];

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(GroupError::MissingInverse(x))?;
        }

        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(GroupError::NotAssociative(x, y, z));
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId(self.identity)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.table[x.0 * self.order + y.0])
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        ElementId(self.inverse[x.0])
    }

    /// The table as rows, e.g. for CSV export.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Powers `x^0, x^1, ..., x^(k-1)` where `k` is the order of `x`.
    pub fn powers(&self, x: ElementId) -> Vec<ElementId> {
        let mut out = vec![self.identity()];
        let mut cur = x;
        while cur.0 != self.identity {
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out
    }

    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut cur = x;
        while cur.0 != self.identity {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn generated_subgroup(&self, x: ElementId) -> CyclicSubgroup {
        let mut members = self.powers(x);
        members.sort_unstable();
        let order = members.len();
        let generators = members
            .iter()
            .copied()
            .filter(|&y| self.element_order(y) == order)
            .collect();
        CyclicSubgroup {
            order,
            members,
            generators,
        }
    }

    /// All distinct cyclic subgroups, sorted by `(order, members)`.
    pub fn cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let mut seen: BTreeMap<(usize, Vec<ElementId>), ()> = BTreeMap::new();
        let mut out = Vec::new();
        for x in self.elements() {
            let sub = self.generated_subgroup(x);
            let key = (sub.order, sub.members.clone());
            if seen.insert(key, ()).is_none() {
                out.push(sub);
            }
        }
        out.sort_by(|a, b| (a.order, &a.members).cmp(&(b.order, &b.members)));
        out
    }

    /// Cyclic subgroups not properly contained in another cyclic subgroup.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let all = self.cyclic_subgroups();
        all.iter()
            .filter(|h| {
                !all.iter()
                    .any(|k| k.order > h.order && h.is_subset_of(k))
            })
            .cloned()
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.table[x * n + y] == self.table[y * n + x]))
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut stats = BTreeMap::new();
        for x in self.elements() {
            *stats.entry(self.element_order(x)).or_insert(0) += 1;
        }
        stats
    }

    /// Set of element orders that occur.
    pub fn spectrum(&self) -> BTreeSet<usize> {
        self.order_statistics().into_keys().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::divisors::phi;

    fn zn_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    fn s3_table() -> Vec<Vec<usize>> {
        // permutations of {0,1,2}; product x*y = x after y
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        perms
            .iter()
            .map(|x| {
                perms
                    .iter()
                    .map(|y| idx([x[y[0]], x[y[1]], x[y[2]]]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn trivial_group() {
        let g = validate_group(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), ElementId(0));
        assert_eq!(g.cyclic_subgroups().len(), 1);
        assert_eq!(g.generated_subgroup(ElementId(0)).members, vec![ElementId(0)]);
    }

    #[test]
    fn empty_and_ragged_tables() {
        assert_eq!(validate_group(&[]), Err(GroupError::EmptyTable));
        assert!(matches!(
            validate_group(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_group(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::NotClosed { row: 0, col: 1, value: 2, .. })
        ));
    }

    #[test]
    fn corrupted_z6_is_rejected() {
        let mut t = zn_table(6);
        t[1][1] = 3;
        let err = validate_group(&t).unwrap_err();
        assert!(
            matches!(err, GroupError::NotAssociative(..) | GroupError::MissingInverse(_)),
            "{err:?}"
        );
    }

    #[test]
    fn no_identity_and_missing_inverse() {
        // constant table: closed, no identity
        assert_eq!(
            validate_group(&[vec![0, 0], vec![0, 0]]),
            Err(GroupError::NoIdentity)
        );
        // identity 0, element 1 squares to 1 and has no inverse
        assert_eq!(
            validate_group(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::MissingInverse(1))
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            validate_group_with_cap(&zn_table(5), 4),
            Err(GroupError::TooLarge { order: 5, cap: 4 })
        );
    }

    #[test]
    fn orders_in_cyclic_groups() {
        let z12 = validate_group(&zn_table(12)).unwrap();
        assert_eq!(z12.element_order(z12.identity()), 1);
        assert_eq!(z12.element_order(ElementId(5)), 12);
        let sub = z12.generated_subgroup(ElementId(5));
        assert_eq!(sub.order, 12);
        assert_eq!(sub.generators.len(), 4);
        assert_eq!(z12.cyclic_subgroups().len(), 6);
        assert_eq!(z12.maximal_cyclic_subgroups().len(), 1);

        let z6 = validate_group(&zn_table(6)).unwrap();
        let h = z6.generated_subgroup(ElementId(2));
        assert_eq!(h.members, vec![ElementId(0), ElementId(2), ElementId(4)]);
        assert_eq!(h.generators, vec![ElementId(2), ElementId(4)]);
        assert_eq!(h.order, 3);
        assert!(z6.is_abelian());
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = validate_group(&s3_table()).unwrap();
        assert!(!s3.is_abelian());
        assert_eq!(
            s3.order_statistics(),
            [(1, 1), (2, 3), (3, 2)].into_iter().collect()
        );
        // 3 of order 2, 1 of order 3
        assert_eq!(s3.maximal_cyclic_subgroups().len(), 4);
    }

    #[test]
    fn prime_order_statistics() {
        for p in [2usize, 3, 5, 7, 11] {
            let g = validate_group(&zn_table(p)).unwrap();
            assert_eq!(g.order_statistics(), [(1, 1), (p, p - 1)].into_iter().collect());
        }
    }

    #[test]
    fn totient_accounting_over_cyclic_subgroups() {
        for n in 1..30 {
            let g = validate_group(&zn_table(n)).unwrap();
            let total: usize = g.cyclic_subgroups().iter().map(|c| phi(c.order)).sum();
            assert_eq!(total, n);
            for c in g.cyclic_subgroups() {
                assert_eq!(c.generators.len(), phi(c.order));
                assert!(c.contains(g.identity()));
            }
        }
    }
}
