//! Concrete groups: cyclic, dihedral, quaternion, semidihedral, modular,
//! Heisenberg, symmetric and alternating groups, direct products, permutation
//! closures, Cayley-table files and the fourteen groups of order 16.

mod csv;
pub mod expr;
mod order16;
pub mod perm;

use std::ops::Deref;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, DEFAULT_MAX_ORDER};
use crate::lattice::divisors::is_prime;
pub use csv::{from_cayley_csv, parse_cayley_csv};
pub use expr::{parse_group_expr, GroupExpr, ParseError};
pub use order16::{order16_catalog, order16_group, PermRecord, ORDER16_PERMUTATION_DATA};
pub use perm::{alternating, from_permutations, symmetric, PermGenerators};

/// Environment variable overriding [`Limits::max_order`].
pub const MAX_ORDER_ENV: &str = "LATGRAPH_MAX_ORDER";

/// Size caps applied while constructing groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Cap on the number of permutations explored by a closure.
    pub max_closure: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_closure: 5000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_order` taken from `LATGRAPH_MAX_ORDER` when set.
    pub fn from_env() -> Result<Self, CatalogError> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_ORDER_ENV) {
            limits.max_order = raw.trim().parse().map_err(|_| {
                CatalogError::InvalidParameter(format!("{MAX_ORDER_ENV}={raw} is not an integer"))
            })?;
        }
        Ok(limits)
    }

    fn check(&self, order: usize) -> Result<(), CatalogError> {
        if order > self.max_order {
            Err(CatalogError::TooLarge {
                order,
                cap: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group of order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid group table: {0}")]
    Group(#[from] GroupError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error in Cayley table at row {row}, column {col}: {message}")]
    CsvParse {
        row: usize,
        col: usize,
        message: String,
    },
    #[error("unknown catalog '{0}'")]
    UnknownCatalog(String),
}

impl CatalogError {
    /// Whether the failure is a size cap rather than bad input.
    pub fn is_too_large(&self) -> bool {
        matches!(
            self,
            CatalogError::TooLarge { .. } | CatalogError::Group(GroupError::TooLarge { .. })
        )
    }
}

/// A group together with a display name and a name for every element.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
    pub element_names: Vec<String>,
}

impl NamedGroup {
    pub fn new(name: String, group: FiniteGroup, element_names: Vec<String>) -> Self {
        debug_assert_eq!(group.order(), element_names.len());
        NamedGroup {
            name,
            group,
            element_names,
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }
}

impl Deref for NamedGroup {
    type Target = FiniteGroup;

    fn deref(&self) -> &FiniteGroup {
        &self.group
    }
}

pub fn cyclic_group(n: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if n == 0 {
        return Err(CatalogError::InvalidParameter("Z(n) needs n >= 1".into()));
    }
    limits.check(n)?;
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    let group = FiniteGroup::from_flat(n, table)?;
    Ok(NamedGroup::new(
        format!("Z({n})"),
        group,
        (0..n).map(|i| i.to_string()).collect(),
    ))
}

/// Normal-form group `a^i b^j` (`0 <= i < m`, `0 <= j < s`) with
/// `a^m = 1`, `b^s = a^t` and `b a b^-1 = a^r`.
struct Metacyclic {
    m: usize,
    s: usize,
    t: usize,
    r: usize,
    letters: (&'static str, &'static str),
}

impl Metacyclic {
    fn build(&self, name: String, limits: &Limits) -> Result<NamedGroup, CatalogError> {
        let (m, s) = (self.m, self.s);
        let n = m * s;
        limits.check(n)?;
        // r^j mod m
        let mut rpow = vec![1 % m; s];
        for j in 1..s {
            rpow[j] = rpow[j - 1] * self.r % m;
        }
        let idx = |i: usize, j: usize| j * m + i;
        let mut table = vec![0; n * n];
        for j in 0..s {
            for i in 0..m {
                for l in 0..s {
                    for k in 0..m {
                        let wrap = if j + l >= s { self.t } else { 0 };
                        let a = (i + k * rpow[j] + wrap) % m;
                        table[idx(i, j) * n + idx(k, l)] = idx(a, (j + l) % s);
                    }
                }
            }
        }
        let group = FiniteGroup::from_flat(n, table)?;
        let power = |letter: &str, e: usize| match e {
            0 => String::new(),
            1 => letter.to_string(),
            _ => format!("{letter}^{e}"),
        };
        let mut names = vec![String::new(); n];
        for j in 0..s {
            for i in 0..m {
                let word = [power(self.letters.0, i), power(self.letters.1, j)]
                    .into_iter()
                    .filter(|w| !w.is_empty())
                    .collect::<Vec<_>>()
                    .join(" ");
                names[idx(i, j)] = if word.is_empty() { "e".into() } else { word };
            }
        }
        Ok(NamedGroup::new(name, group, names))
    }
}

fn power_of_two_exponent(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// Dihedral group of the given order `<r, s | r^(order/2), s^2, s r s = r^-1>`.
pub fn dihedral(order: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if order < 4 || order % 2 != 0 {
        return Err(CatalogError::InvalidParameter(format!(
            "D(order) needs an even order >= 4, got {order}"
        )));
    }
    let m = order / 2;
    Metacyclic {
        m,
        s: 2,
        t: 0,
        r: m - 1,
        letters: ("r", "s"),
    }
    .build(format!("D({order})"), limits)
}

/// Generalized quaternion group `<a, b | a^(order/2), b^2 = a^(order/4), b a b^-1 = a^-1>`.
pub fn generalized_quaternion(order: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !matches!(power_of_two_exponent(order), Some(e) if e >= 3) {
        return Err(CatalogError::InvalidParameter(format!(
            "Q(order) needs a power of two >= 8, got {order}"
        )));
    }
    let m = order / 2;
    Metacyclic {
        m,
        s: 2,
        t: m / 2,
        r: m - 1,
        letters: ("a", "b"),
    }
    .build(format!("Q({order})"), limits)
}

/// Semidihedral group `<a, x | a^(order/2), x^2, x a x = a^(order/4 - 1)>`.
pub fn semidihedral(order: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !matches!(power_of_two_exponent(order), Some(e) if e >= 4) {
        return Err(CatalogError::InvalidParameter(format!(
            "SD(order) needs 2^n with n >= 4, got {order}"
        )));
    }
    let m = order / 2;
    Metacyclic {
        m,
        s: 2,
        t: 0,
        r: m / 2 - 1,
        letters: ("a", "x"),
    }
    .build(format!("SD({order})"), limits)
}

/// Modular `p`-group of order `p^n`:
/// `<a, x | a^(p^(n-1)), x^p, x^-1 a x = a^(1 + p^(n-2))>`.
pub fn modular_group(p: usize, n: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !is_prime(p) || n < 3 {
        return Err(CatalogError::InvalidParameter(format!(
            "M(p,n) needs p prime and n >= 3, got M({p},{n})"
        )));
    }
    let order = p
        .checked_pow(n as u32)
        .filter(|&o| o <= limits.max_order)
        .ok_or(CatalogError::TooLarge {
            order: p.saturating_pow(n as u32),
            cap: limits.max_order,
        })?;
    let m = order / p;
    let u = (1 + m / p) % m;
    // x a x^-1 = a^(u^-1)
    let r = (1..m).find(|&v| u * v % m == 1).unwrap_or(1);
    Metacyclic {
        m,
        s: p,
        t: 0,
        r,
        letters: ("a", "x"),
    }
    .build(format!("M({p},{n})"), limits)
}

/// Upper unitriangular 3x3 matrices over `Z/p`, `p` an odd prime.
pub fn heisenberg(p: usize, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    if !is_prime(p) || p == 2 {
        return Err(CatalogError::InvalidParameter(format!(
            "Heis(p) needs an odd prime, got {p}"
        )));
    }
    let n = p.checked_pow(3).unwrap_or(usize::MAX);
    limits.check(n)?;
    // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]]
    let idx = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut table = vec![0; n * n];
    let mut names = vec![String::new(); n];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                names[idx(a, b, c)] = format!("[{a},{b},{c}]");
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            table[idx(a, b, c) * n + idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                        }
                    }
                }
            }
        }
    }
    let group = FiniteGroup::from_flat(n, table)?;
    Ok(NamedGroup::new(format!("Heis({p})"), group, names))
}

/// Direct product; element `(g, h)` has id `g * |H| + h`.
pub fn direct_product(
    left: &NamedGroup,
    right: &NamedGroup,
    limits: &Limits,
) -> Result<NamedGroup, CatalogError> {
    let (a, b) = (left.order(), right.order());
    let n = a.saturating_mul(b);
    limits.check(n)?;
    let mut table = Vec::with_capacity(n * n);
    for g1 in left.elements() {
        for h1 in right.elements() {
            for g2 in left.elements() {
                for h2 in right.elements() {
                    table.push(left.mul(g1, g2).0 * b + right.mul(h1, h2).0);
                }
            }
        }
    }
    let group = FiniteGroup::from_flat(n, table)?;
    let names = left
        .element_names
        .iter()
        .flat_map(|g| right.element_names.iter().map(move |h| format!("({g},{h})")))
        .collect();
    Ok(NamedGroup::new(
        format!("{}x{}", left.name, right.name),
        group,
        names,
    ))
}

/// Construct the group an expression denotes.
pub fn build_group(expr: &GroupExpr, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    let g = match expr {
        GroupExpr::Cyclic(n) => cyclic_group(*n, limits)?,
        GroupExpr::Dihedral(n) => dihedral(*n, limits)?,
        GroupExpr::GeneralizedQuaternion(n) => generalized_quaternion(*n, limits)?,
        GroupExpr::Semidihedral(n) => semidihedral(*n, limits)?,
        GroupExpr::ModularGroup(p, n) => modular_group(*p, *n, limits)?,
        GroupExpr::Heisenberg(p) => heisenberg(*p, limits)?,
        GroupExpr::Symmetric(n) => symmetric(*n, limits)?,
        GroupExpr::Alternating(n) => alternating(*n, limits)?,
        GroupExpr::DirectProduct(a, b) => {
            let left = build_group(a, limits)?;
            let right = build_group(b, limits)?;
            direct_product(&left, &right, limits)?
        }
        GroupExpr::FromCayleyFile(path) => from_cayley_csv(path, limits)?,
        GroupExpr::FromPermutations(gens) => from_permutations(gens, limits)?,
        GroupExpr::Order16(k) => {
            let g = order16_group(*k)?;
            limits.check(g.order())?;
            g
        }
    };
    Ok(g)
}

/// Parse and build in one step.
pub fn group_from_str(text: &str, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    let expr = parse_group_expr(text)?;
    let g = build_group(&expr, limits)?;
    Ok(if matches!(expr, GroupExpr::DirectProduct(..)) {
        g.renamed(expr.to_string())
    } else {
        g
    })
}

/// The fixed verification corpus: every constructor family at orders up to
/// 100, products of them, the fourteen groups of order 16, and `S(5)`.
pub const CORPUS: &[&str] = &[
    "Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)", "Z(10)", "Z(11)",
    "Z(12)", "Z(13)", "Z(14)", "Z(15)", "Z(16)", "Z(18)", "Z(20)", "Z(24)", "Z(25)", "Z(27)",
    "Z(30)", "Z(36)", "Z(60)",
    "D(4)", "D(6)", "D(8)", "D(10)", "D(12)", "D(16)", "D(18)", "D(20)", "D(24)", "D(30)",
    "Q(8)", "Q(16)", "Q(32)", "SD(16)", "SD(32)", "M(2,4)", "M(2,5)", "M(3,3)", "Heis(3)",
    "S(1)", "S(2)", "S(3)", "S(4)", "S(5)", "A(3)", "A(4)", "A(5)",
    "Z(2)xZ(2)", "Z(2)xZ(4)", "Z(2)xZ(6)", "Z(2)xZ(8)", "Z(3)xZ(3)", "Z(2)xZ(2)xZ(2)",
    "Z(2)xZ(2)xZ(3)", "Z(4)xZ(4)", "Z(3)xZ(6)", "Z(5)xZ(5)", "Z(2)xZ(2)xZ(2)xZ(2)",
    "Z(3)xZ(3)xZ(3)", "Z(3)xZ(3)xZ(3)xZ(2)", "Heis(3)xZ(2)", "Z(2)xZ(2)xZ(5)",
    "Q(8)xZ(2)", "Q(8)xZ(3)", "Q(8)xZ(5)", "D(8)xZ(2)", "D(8)xZ(3)", "S(3)xZ(2)", "S(3)xZ(3)",
    "S(3)xS(3)", "A(4)xZ(2)", "D(10)xZ(3)", "Z(2)xZ(2)xZ(2)xZ(3)",
    "G16(1)", "G16(2)", "G16(3)", "G16(4)", "G16(5)", "G16(6)", "G16(7)", "G16(8)", "G16(9)",
    "G16(10)", "G16(11)", "G16(12)", "G16(13)", "G16(14)",
];

/// Build every group of [`CORPUS`].
pub fn corpus(limits: &Limits) -> Result<Vec<NamedGroup>, CatalogError> {
    CORPUS
        .iter()
        .map(|e| Ok(group_from_str(e, limits)?.renamed(*e)))
        .collect()
}

/// Named catalogs understood by the CLI.
pub fn named_catalog(name: &str, limits: &Limits) -> Result<Vec<NamedGroup>, CatalogError> {
    match name {
        "order16" => Ok(order16_catalog()),
        "corpus" => corpus(limits),
        other => Err(CatalogError::UnknownCatalog(other.into())),
    }
}
