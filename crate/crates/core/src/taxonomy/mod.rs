//! Identities of finite simple groups and their order arithmetic.

pub(crate) mod identify;
mod lie;
mod predicates;
mod sporadic;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

pub use identify::{identify_by_order, identify_simple};
pub use lie::{
    artin_collision_scan, enumerate_lie, lie_order, lie_order_formula, CollisionRecord,
    CollisionStatus, LieEntry, LieFamily, LieId, ALL_FAMILIES, TITS_ORDER,
};
pub use predicates::{in_class_b, in_class_jor, in_class_lie_ell, is_product_of_lie};
pub use sporadic::{sporadic_order, SPORADIC_NAMES};

/// One labeling of a finite simple group.
///
/// The derived order (cyclic, alternating, Lie type, Tits, sporadic, unresolved)
/// is also the display preference: the smallest alias labels the group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleKind {
    Cyclic(u64),
    Alternating(u32),
    Lie(LieId),
    /// The derived group of `2F4(2)`.
    Tits,
    Sporadic(&'static str),
    Unresolved(BigUint),
}

impl SimpleKind {
    pub fn order(&self) -> BigUint {
        match self {
            SimpleKind::Cyclic(p) => BigUint::from(*p),
            SimpleKind::Alternating(n) => alternating_order(*n),
            SimpleKind::Lie(id) => lie_order_formula(id.family, id.rank, id.q),
            SimpleKind::Tits => BigUint::from(TITS_ORDER),
            SimpleKind::Sporadic(name) => sporadic_order(name).expect("known sporadic name"),
            SimpleKind::Unresolved(n) => n.clone(),
        }
    }

    /// Characteristic if this label is of Lie type.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            SimpleKind::Lie(id) => Some(id.characteristic()),
            SimpleKind::Tits => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleKind::Cyclic(p) => write!(f, "Z/{p}"),
            SimpleKind::Alternating(n) => write!(f, "Alt{n}"),
            SimpleKind::Lie(id) => write!(f, "{id}"),
            SimpleKind::Tits => write!(f, "2F4q2'"),
            SimpleKind::Sporadic(name) => write!(f, "{name}"),
            SimpleKind::Unresolved(n) => write!(f, "unresolved(order={n})"),
        }
    }
}

pub fn alternating_order(n: u32) -> BigUint {
    let mut o = BigUint::one();
    for k in 3..=n {
        o *= k;
    }
    o
}

/// Isomorphism type of a finite simple group: every known label for it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGroupId {
    primary: SimpleKind,
    aliases: Vec<SimpleKind>,
    order: BigUint,
}

/// Coincidences between labels of different shape.
fn coincidence_table() -> Vec<Vec<SimpleKind>> {
    use LieFamily::*;
    let lie = |f, n, q| SimpleKind::Lie(LieId::new(f, n, q));
    vec![
        vec![SimpleKind::Alternating(5), lie(A, 1, 4), lie(A, 1, 5)],
        vec![lie(A, 1, 7), lie(A, 2, 2)],
        vec![SimpleKind::Alternating(6), lie(A, 1, 9)],
        vec![SimpleKind::Alternating(8), lie(A, 3, 2)],
        vec![lie(B, 2, 3), lie(TwistedA, 3, 2)],
    ]
}

/// `B_n(q)` and `C_n(q)` coincide for `n = 2` and for even `q`.
fn isogeny_partner(kind: &SimpleKind) -> Option<SimpleKind> {
    let SimpleKind::Lie(id) = kind else {
        return None;
    };
    let same = id.rank == 2 || id.q % 2 == 0;
    match id.family {
        LieFamily::B if same => Some(SimpleKind::Lie(LieId::new(LieFamily::C, id.rank, id.q))),
        LieFamily::C if same => Some(SimpleKind::Lie(LieId::new(LieFamily::B, id.rank, id.q))),
        _ => None,
    }
}

fn alias_closure(kind: SimpleKind) -> BTreeSet<SimpleKind> {
    let table = coincidence_table();
    let mut set = BTreeSet::from([kind]);
    loop {
        let before = set.len();
        let current: Vec<SimpleKind> = set.iter().cloned().collect();
        for k in &current {
            if let Some(p) = isogeny_partner(k) {
                set.insert(p);
            }
            for row in &table {
                if row.contains(k) {
                    set.extend(row.iter().cloned());
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

impl SimpleGroupId {
    pub fn from_kind(kind: SimpleKind) -> Self {
        let order = kind.order();
        let aliases: Vec<SimpleKind> = alias_closure(kind).into_iter().collect();
        debug_assert!(aliases.iter().all(|a| a.order() == order));
        SimpleGroupId {
            primary: aliases[0].clone(),
            aliases,
            order,
        }
    }

    pub fn cyclic(p: u64) -> Self {
        Self::from_kind(SimpleKind::Cyclic(p))
    }

    pub fn alternating(n: u32) -> Self {
        Self::from_kind(SimpleKind::Alternating(n))
    }

    pub fn lie(family: LieFamily, rank: u32, q: u64) -> Self {
        Self::from_kind(SimpleKind::Lie(LieId::new(family, rank, q)))
    }

    pub fn unresolved(order: BigUint) -> Self {
        Self::from_kind(SimpleKind::Unresolved(order))
    }

    pub fn primary(&self) -> &SimpleKind {
        &self.primary
    }

    pub fn aliases(&self) -> &[SimpleKind] {
        &self.aliases
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self.primary, SimpleKind::Cyclic(_))
    }

    pub fn is_unresolved(&self) -> bool {
        matches!(self.primary, SimpleKind::Unresolved(_))
    }

    /// The prime `p` if this is `Z/p`.
    pub fn cyclic_prime(&self) -> Option<u64> {
        match self.primary {
            SimpleKind::Cyclic(p) => Some(p),
            _ => None,
        }
    }

    /// Whether two ids name isomorphic groups. Unresolved ids never match anything.
    pub fn shares_alias(&self, other: &SimpleGroupId) -> bool {
        if self.is_unresolved() || other.is_unresolved() {
            return false;
        }
        self.aliases.iter().any(|a| other.aliases.contains(a))
    }

    /// Characteristics of the Lie-type aliases.
    pub fn characteristics(&self) -> BTreeSet<u64> {
        self.aliases
            .iter()
            .filter_map(SimpleKind::characteristic)
            .collect()
    }

    /// Membership in the class of simple groups of Lie type in characteristic `ell`.
    pub fn is_lie_in(&self, ell: u64) -> bool {
        self.characteristics().contains(&ell)
    }

    /// All aliases joined by `=`.
    pub fn alias_string(&self) -> String {
        self.aliases
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join("=")
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.primary)
    }
}
