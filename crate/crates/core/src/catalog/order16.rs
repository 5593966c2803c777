//! The fourteen groups of order 16, indexed in the standard small-groups
//! numbering. Groups without a constructor family are embedded as
//! permutation generators of a regular representation.

use super::perm::{from_permutations, PermGenerators};
use super::{
    cyclic_group, dihedral, direct_product, generalized_quaternion, modular_group, semidihedral,
    CatalogError, Limits, NamedGroup,
};

/// A permutation group stored as static data.
#[derive(Clone, Copy, Debug)]
pub struct PermRecord {
    pub name: &'static str,
    pub degree: usize,
    pub generators: &'static [&'static [usize]],
}

impl PermRecord {
    pub fn generators(&self) -> PermGenerators {
        PermGenerators {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.to_vec()).collect(),
        }
    }
}

/// Regular representations of the three order-16 groups that are neither
/// products nor members of a constructor family.
pub const ORDER16_PERMUTATION_DATA: &[(usize, PermRecord)] = &[
    (
        3,
        PermRecord {
            name: "(Z4xZ2):Z2",
            degree: 16,
            generators: &[
                &[4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3],
                &[2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13],
                &[1, 0, 3, 2, 7, 6, 5, 4, 9, 8, 11, 10, 15, 14, 13, 12],
            ],
        },
    ),
    (
        4,
        PermRecord {
            name: "Z4:Z4",
            degree: 16,
            generators: &[
                &[4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3],
                &[1, 2, 3, 0, 13, 14, 15, 12, 9, 10, 11, 8, 5, 6, 7, 4],
            ],
        },
    ),
    (
        13,
        PermRecord {
            name: "D8oZ4",
            degree: 16,
            generators: &[
                &[2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13],
                &[1, 0, 11, 10, 5, 4, 15, 14, 9, 8, 3, 2, 13, 12, 7, 6],
                &[4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3],
            ],
        },
    ),
];

const NAMES: [&str; 14] = [
    "Z16", "Z4xZ4", "(Z4xZ2):Z2", "Z4:Z4", "Z8xZ2", "M16", "D16", "SD16", "Q16", "Z4xZ2xZ2",
    "D8xZ2", "Q8xZ2", "D8oZ4", "Z2^4",
];

fn product_of(parts: &[NamedGroup], limits: &Limits) -> Result<NamedGroup, CatalogError> {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = direct_product(&acc, p, limits)?;
    }
    Ok(acc)
}

fn build(k: usize) -> Result<NamedGroup, CatalogError> {
    let l = Limits::default();
    let z = |n| cyclic_group(n, &l);
    let g = match k {
        1 => z(16)?,
        2 => product_of(&[z(4)?, z(4)?], &l)?,
        5 => product_of(&[z(8)?, z(2)?], &l)?,
        6 => modular_group(2, 4, &l)?,
        7 => dihedral(16, &l)?,
        8 => semidihedral(16, &l)?,
        9 => generalized_quaternion(16, &l)?,
        10 => product_of(&[z(4)?, z(2)?, z(2)?], &l)?,
        11 => product_of(&[dihedral(8, &l)?, z(2)?], &l)?,
        12 => product_of(&[generalized_quaternion(8, &l)?, z(2)?], &l)?,
        14 => product_of(&[z(2)?, z(2)?, z(2)?, z(2)?], &l)?,
        3 | 4 | 13 => {
            let (_, rec) = ORDER16_PERMUTATION_DATA
                .iter()
                .find(|(i, _)| *i == k)
                .expect("embedded record");
            from_permutations(&rec.generators(), &l)?
        }
        _ => {
            return Err(CatalogError::InvalidParameter(format!(
                "G16(k) needs 1 <= k <= 14, got {k}"
            )))
        }
    };
    Ok(g.renamed(NAMES[k - 1]))
}

/// The `k`-th group of order 16, `1 <= k <= 14`.
pub fn order16_group(k: usize) -> Result<NamedGroup, CatalogError> {
    build(k)
}

/// All fourteen groups of order 16, in index order.
pub fn order16_catalog() -> Vec<NamedGroup> {
    (1..=14)
        .map(|k| build(k).expect("embedded order-16 data is valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    /// Sizes of the fibres of `x -> x^2` over non-identity squares.
    fn squares(g: &NamedGroup) -> Vec<usize> {
        let mut fibres = BTreeMap::new();
        for x in g.elements() {
            let sq = g.mul(x, x);
            if sq != g.identity() {
                *fibres.entry(sq).or_insert(0) += 1;
            }
        }
        let mut sizes: Vec<usize> = fibres.into_values().collect();
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn fourteen_distinct_groups() {
        let all = order16_catalog();
        assert_eq!(all.len(), 14);
        let abelian: Vec<usize> = (0..14).filter(|&i| all[i].is_abelian()).map(|i| i + 1).collect();
        assert_eq!(abelian, vec![1, 2, 5, 10, 14]);
        // order statistics, abelianness, squaring fibres and centre size
        // separate all fourteen
        let invariants: BTreeSet<_> = all
            .iter()
            .map(|g| {
                let centre = g
                    .elements()
                    .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
                    .count();
                (g.order_statistics(), g.is_abelian(), squares(g), centre)
            })
            .collect();
        assert_eq!(invariants.len(), 14);
    }

    #[test]
    fn embedded_records() {
        let stats = |pairs: &[(usize, usize)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        let g3 = order16_group(3).unwrap();
        let g4 = order16_group(4).unwrap();
        let g13 = order16_group(13).unwrap();
        assert_eq!(g3.order_statistics(), stats(&[(1, 1), (2, 7), (4, 8)]));
        assert_eq!(g4.order_statistics(), stats(&[(1, 1), (2, 3), (4, 12)]));
        assert_eq!(g13.order_statistics(), stats(&[(1, 1), (2, 7), (4, 8)]));
        for g in [&g3, &g4, &g13] {
            assert_eq!(g.order(), 16);
            assert!(!g.is_abelian());
        }
        assert_eq!(squares(&g3), vec![4, 4]);
        assert_eq!(squares(&g13), vec![8]);
        assert_eq!(g13.name, "D8oZ4");
        assert!(order16_group(0).is_err());
        assert!(order16_group(15).is_err());
    }
}
