//! Recognition of a simple group from its order and, where needed, element orders.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::lie::enumerate_lie;
use super::sporadic::sporadic_with_order;
use super::{alternating_order, SimpleGroupId, SimpleKind};
use crate::classes::conjugacy_classes;
use crate::config::Config;
use crate::error::GroupError;
use crate::field::is_prime;
use crate::group::FiniteGroup;

/// Isomorphism types of simple groups of the given order.
fn candidates(order: &BigUint, tits: bool) -> Vec<SimpleGroupId> {
    let mut out: Vec<SimpleGroupId> = Vec::new();
    let mut push = |id: SimpleGroupId| {
        if !out.contains(&id) {
            out.push(id);
        }
    };
    if let Some(n) = order.to_u64() {
        if is_prime(n) {
            push(SimpleGroupId::cyclic(n));
            return out;
        }
    }
    let mut n = 5;
    loop {
        let a = alternating_order(n);
        if &a == order {
            push(SimpleGroupId::alternating(n));
        }
        if &a >= order {
            break;
        }
        n += 1;
    }
    for e in enumerate_lie(order, tits) {
        if &e.order == order {
            push(e.id);
        }
    }
    for name in sporadic_with_order(order) {
        push(SimpleGroupId::from_kind(SimpleKind::Sporadic(name)));
    }
    out
}

/// Identifies a simple group of the given order.
///
/// `has_element_of_order` is consulted only when two non-isomorphic simple groups
/// share the order and an element order separates them.
pub fn identify_by_order(
    order: &BigUint,
    tits: bool,
    has_element_of_order: impl FnOnce(u64) -> Result<bool, GroupError>,
) -> Result<SimpleGroupId, GroupError> {
    let cands = candidates(order, tits);
    match cands.len() {
        1 => Ok(cands.into_iter().next().unwrap()),
        2 if order == &BigUint::from(20160u32) => {
            // Alt8 has elements of order 15, A2(4) does not.
            if has_element_of_order(15)? {
                Ok(SimpleGroupId::alternating(8))
            } else {
                Ok(SimpleGroupId::lie(super::LieFamily::A, 2, 4))
            }
        }
        _ => Ok(SimpleGroupId::unresolved(order.clone())),
    }
}

pub(crate) fn has_element_of_order(
    g: &FiniteGroup,
    k: u64,
    cfg: &Config,
) -> Result<bool, GroupError> {
    Ok(conjugacy_classes(g, cfg)?
        .iter()
        .any(|c| c.representative.order() == k))
}

/// Identifies a group after verifying that it is simple.
pub fn identify_simple(g: &FiniteGroup, cfg: &Config) -> Result<SimpleGroupId, GroupError> {
    if g.is_trivial() {
        return Err(GroupError::Precondition(
            "the trivial group is not simple".into(),
        ));
    }
    let order = BigUint::from(g.order());
    if g.is_abelian() {
        let n = g.order();
        if n > u64::MAX as u128 || !is_prime(n as u64) {
            return Err(GroupError::Precondition(format!(
                "abelian group of order {n} is not simple"
            )));
        }
        return Ok(SimpleGroupId::cyclic(n as u64));
    }
    let classes = conjugacy_classes(g, cfg)?;
    for c in &classes {
        if !c.representative.is_identity()
            && g.normal_closure_perms(std::slice::from_ref(&c.representative))
                .order()
                != g.order()
        {
            return Err(GroupError::Precondition(
                "group has a proper nontrivial normal subgroup".into(),
            ));
        }
    }
    debug_assert!(!order.is_zero());
    identify_by_order(&order, cfg.tits_group, |k| {
        Ok(classes.iter().any(|c| c.representative.order() == k))
    })
}
