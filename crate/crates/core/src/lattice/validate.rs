use std::fmt;

use super::divisors::{divisors, is_prime};
use super::CyclicLattice;

/// One failed lattice invariant with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    ZeroOrder(usize),
    NoBottom,
    MultipleBottoms(Vec<usize>),
    SelfCover(usize),
    NonPrimeCoverQuotient {
        lower: usize,
        upper: usize,
        lower_order: usize,
        upper_order: usize,
    },
    CyclicCovers,
    ExtraMinimal(usize),
    DownSetNotDivisorPoset(usize),
    NoMeet(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty lattice"),
            Violation::ZeroOrder(v) => write!(f, "node {v} has order 0"),
            Violation::NoBottom => write!(f, "no node of order 1"),
            Violation::MultipleBottoms(v) => write!(f, "multiple bottoms: nodes {v:?}"),
            Violation::SelfCover(v) => write!(f, "node {v} covers itself"),
            Violation::NonPrimeCoverQuotient {
                lower,
                upper,
                lower_order,
                upper_order,
            } => write!(
                f,
                "non-prime cover quotient: {lower} (order {lower_order}) under {upper} (order {upper_order})"
            ),
            Violation::CyclicCovers => write!(f, "cover relation has a cycle"),
            Violation::ExtraMinimal(v) => write!(f, "node {v} is minimal but is not the bottom"),
            Violation::DownSetNotDivisorPoset(v) => {
                write!(f, "down-set of node {v} is not the divisor poset of its order")
            }
            Violation::NoMeet(a, b) => write!(f, "nodes {a} and {b} have no greatest lower bound"),
        }
    }
}

/// Every violation found by [`validate_lattice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for LatticeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Check every structural invariant of an order-labeled cyclic lattice and
/// report all violations at once.
pub fn validate_lattice(lattice: &CyclicLattice) -> Result<(), LatticeReport> {
    let mut violations = Vec::new();
    let n = lattice.node_count();
    if n == 0 {
        return Err(LatticeReport {
            violations: vec![Violation::Empty],
        });
    }

    let orders = lattice.orders();
    let mut order_ok = true;
    for (v, &d) in orders.iter().enumerate() {
        if d == 0 {
            violations.push(Violation::ZeroOrder(v));
            order_ok = false;
        }
    }
    let bottoms: Vec<usize> = (0..n).filter(|&v| orders[v] == 1).collect();
    match bottoms.len() {
        0 => violations.push(Violation::NoBottom),
        1 => {}
        _ => violations.push(Violation::MultipleBottoms(bottoms.clone())),
    }

    for &(lo, hi) in lattice.covers() {
        if lo == hi {
            violations.push(Violation::SelfCover(lo.0));
            continue;
        }
        let (a, b) = (orders[lo.0], orders[hi.0]);
        if a == 0 || b == 0 || b % a != 0 || !is_prime(b / a) {
            violations.push(Violation::NonPrimeCoverQuotient {
                lower: lo.0,
                upper: hi.0,
                lower_order: a,
                upper_order: b,
            });
        }
    }

    if lattice.levelize().is_err() {
        violations.push(Violation::CyclicCovers);
        return Err(LatticeReport { violations });
    }

    for v in 0..n {
        if lattice.lower[v].is_empty() && !(bottoms.len() == 1 && bottoms[0] == v) && orders[v] != 1 {
            violations.push(Violation::ExtraMinimal(v));
        }
    }

    if !order_ok {
        return Err(LatticeReport { violations });
    }

    let down = lattice.all_down_bits();

    // each down-set, ordered by reachability, must be the divisor poset of
    // the node's order via u -> order(u)
    for v in 0..n {
        let members: Vec<usize> = down[v].iter().collect();
        let mut seen: Vec<usize> = members.iter().map(|&u| orders[u]).collect();
        seen.sort_unstable();
        let ok = seen == divisors(orders[v])
            && members.iter().all(|&u| {
                members.iter().all(|&w| {
                    let reach = down[w].contains(u);
                    reach == (orders[w] % orders[u] == 0)
                })
            });
        if !ok {
            violations.push(Violation::DownSetNotDivisorPoset(v));
        }
    }

    // meets: the common down-set must itself be a principal down-set
    for a in 0..n {
        for b in a + 1..n {
            let common = down[a].intersection(&down[b]);
            let has_meet = common.iter().any(|m| down[m] == common);
            if !has_meet {
                violations.push(Violation::NoMeet(a, b));
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(LatticeReport { violations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(orders: Vec<usize>, covers: &[(usize, usize)]) -> Vec<Violation> {
        let l = CyclicLattice::from_parts(orders, covers.iter().copied()).unwrap();
        match validate_lattice(&l) {
            Ok(()) => vec![],
            Err(r) => r.violations,
        }
    }

    #[test]
    fn valid_small_lattices() {
        assert!(report(vec![1], &[]).is_empty());
        assert!(report(vec![1, 2, 4], &[(0, 1), (1, 2)]).is_empty());
        // Z2 x Z2
        assert!(report(vec![1, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)]).is_empty());
    }

    #[test]
    fn multiple_bottoms() {
        let v = report(vec![1, 1, 2], &[(0, 2), (1, 2)]);
        assert!(v.iter().any(|x| matches!(x, Violation::MultipleBottoms(b) if b == &vec![0, 1])));
        assert!(v.iter().any(|x| x.to_string().contains("multiple bottoms")));
    }

    #[test]
    fn composite_quotient() {
        let v = report(vec![1, 2, 8], &[(0, 1), (1, 2)]);
        assert!(v.contains(&Violation::NonPrimeCoverQuotient {
            lower: 1,
            upper: 2,
            lower_order: 2,
            upper_order: 8
        }));
        assert!(v[0].to_string().contains("non-prime cover quotient"));
    }

    #[test]
    fn missing_divisor_in_down_set() {
        // order 6 node covering only an order-3 node: the order-2 subgroup is absent
        let v = report(vec![1, 3, 6], &[(0, 1), (1, 2)]);
        assert!(v.contains(&Violation::DownSetNotDivisorPoset(2)));
    }

    #[test]
    fn no_bottom_and_extra_minimal() {
        let v = report(vec![2, 4], &[(0, 1)]);
        assert!(v.contains(&Violation::NoBottom));
        assert!(v.contains(&Violation::ExtraMinimal(0)));
    }

    #[test]
    fn two_meets_fail() {
        // two order-6 nodes over the same order-2 and order-3 nodes: their
        // common down-set {1, 2, 3} has no maximum
        let v = report(
            vec![1, 2, 3, 6, 6],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)],
        );
        assert!(v.contains(&Violation::NoMeet(3, 4)));
    }

    #[test]
    fn cycle_is_reported() {
        let v = report(vec![1, 2, 2], &[(0, 1), (1, 2), (2, 1)]);
        assert!(v.contains(&Violation::CyclicCovers));
    }
}
