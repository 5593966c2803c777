//! Permutation groups by breadth-first closure.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{CatalogError, Limits, NamedGroup};
use crate::group::FiniteGroup;

/// Generators of a permutation group on `0..degree`. Each generator maps
/// point `i` to `generator[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermGenerators {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermGenerators {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, CatalogError> {
        let gens = PermGenerators { degree, generators };
        gens.validate()?;
        Ok(gens)
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        if self.degree == 0 {
            return Err(CatalogError::InvalidPermutation("degree must be positive".into()));
        }
        for (k, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(CatalogError::InvalidPermutation(format!(
                    "generator {k} has length {}, expected {}",
                    g.len(),
                    self.degree
                )));
            }
            let mut hit = vec![false; self.degree];
            for &img in g {
                if img >= self.degree || std::mem::replace(&mut hit[img], true) {
                    return Err(CatalogError::InvalidPermutation(format!(
                        "generator {k} is not a bijection of 0..{}",
                        self.degree
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `(x * y)(i) = x(y(i))`: apply `y` first.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}

/// Cycle notation on points `1..=degree`; `()` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Close the generators under composition. Elements are indexed in
/// discovery order starting from the identity.
pub fn from_permutations(gens: &PermGenerators, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    gens.validate()?;
    let identity: Vec<usize> = (0..gens.degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in &gens.generators {
            let next = compose(&cur, g);
            if !index.contains_key(&next) {
                if elems.len() >= limits.max_closure {
                    return Err(CatalogError::TooLarge {
                        order: elems.len() + 1,
                        cap: limits.max_closure,
                    });
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
    }
    let n = elems.len();
    limits.check(n)?;
    let mut table = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            table.push(index[&compose(x, y)]);
        }
    }
    let group = FiniteGroup::from_flat(n, table)?;
    let names = elems.iter().map(|p| cycle_notation(p)).collect();
    Ok(NamedGroup::new(format!("Perm({})", gens.degree), group, names))
}

fn transposition(degree: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    p.swap(0, 1);
    p
}

fn long_cycle(degree: usize) -> Vec<usize> {
    (0..degree).map(|i| (i + 1) % degree).collect()
}

/// Symmetric group on `n` points, `1 <= n <= 6`.
pub fn symmetric(n: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !(1..=6).contains(&n) {
        return Err(CatalogError::InvalidParameter(format!(
            "S(n) needs 1 <= n <= 6, got {n}"
        )));
    }
    let generators = if n == 1 {
        vec![]
    } else {
        vec![transposition(n), long_cycle(n)]
    };
    let g = from_permutations(&PermGenerators { degree: n, generators }, limits)?;
    Ok(g.renamed(format!("S({n})")))
}

/// Alternating group on `n` points, `2 <= n <= 6`, generated by the
/// 3-cycles `(1 2 k)`.
pub fn alternating(n: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !(2..=6).contains(&n) {
        return Err(CatalogError::InvalidParameter(format!(
            "A(n) needs 2 <= n <= 6, got {n}"
        )));
    }
    let generators = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    let g = from_permutations(&PermGenerators { degree: n, generators }, limits)?;
    Ok(g.renamed(format!("A({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn symmetric_orders() {
        let l = Limits::default();
        for n in 1..=5 {
            assert_eq!(symmetric(n, &l).unwrap().order(), factorial(n));
        }
        let big = Limits {
            max_order: 720,
            ..Limits::default()
        };
        assert_eq!(symmetric(6, &big).unwrap().order(), 720);
        assert!(matches!(symmetric(6, &l), Err(CatalogError::TooLarge { .. })));
        assert!(symmetric(7, &l).is_err());
        assert!(symmetric(0, &l).is_err());
    }

    #[test]
    fn alternating_orders() {
        let l = Limits::default();
        assert_eq!(alternating(2, &l).unwrap().order(), 1);
        assert_eq!(alternating(3, &l).unwrap().order(), 3);
        assert_eq!(alternating(4, &l).unwrap().order(), 12);
        assert_eq!(alternating(5, &l).unwrap().order(), 60);
        assert!(!alternating(4, &l).unwrap().is_abelian());
    }

    #[test]
    fn single_cycle_is_cyclic() {
        let g = from_permutations(
            &PermGenerators::new(7, vec![long_cycle(7)]).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.maximal_cyclic_subgroups().len(), 1);
    }

    #[test]
    fn s4_maximal_cyclic_census() {
        let g = symmetric(4, &Limits::default()).unwrap();
        let maxi = g.maximal_cyclic_subgroups();
        let count = |d| maxi.iter().filter(|c| c.order == d).count();
        assert_eq!(maxi.len(), 13);
        assert_eq!((count(4), count(3), count(2)), (3, 4, 6));
    }

    #[test]
    fn bad_generators() {
        assert!(PermGenerators::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PermGenerators::new(3, vec![vec![0, 1]]).is_err());
        assert!(PermGenerators::new(0, vec![]).is_err());
        let tight = Limits {
            max_closure: 10,
            ..Limits::default()
        };
        let s4 = PermGenerators::new(4, vec![transposition(4), long_cycle(4)]).unwrap();
        assert!(matches!(
            from_permutations(&s4, &tight),
            Err(CatalogError::TooLarge { .. })
        ));
    }

    #[test]
    fn cycle_names() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 2, 0, 3]), "(1 2 3)");
        assert_eq!(cycle_notation(&[1, 0, 3, 2]), "(1 2)(3 4)");
    }
}
