//! Membership in the classes of bounded, Jordan-type and Lie-type-by-abelian groups.

use num_integer::Integer;

use crate::config::Config;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::homomorphism::quotient;
use crate::structure::normal_lattice;
use crate::taxonomy::identify_simple;

/// Order at most `d`.
pub fn in_class_b(g: &FiniteGroup, d: u128) -> bool {
    g.order() <= d
}

/// Some abelian normal subgroup has index at most `d`.
pub fn in_class_jor(g: &FiniteGroup, d: u128, cfg: &Config) -> Result<bool, GroupError> {
    if g.is_abelian() {
        return Ok(d >= 1);
    }
    let lat = normal_lattice(g, cfg)?;
    Ok(lat
        .members()
        .iter()
        .any(|m| m.group.is_abelian() && g.order() / m.group.order() <= d))
}

/// Whether `q` is a direct product of nonabelian simple groups of Lie type in
/// characteristic `ell` (the empty product included).
pub fn is_product_of_lie(q: &FiniteGroup, ell: u64, cfg: &Config) -> Result<bool, GroupError> {
    if q.is_trivial() {
        return Ok(true);
    }
    if q.is_abelian() {
        return Ok(false);
    }
    let lat = normal_lattice(q, cfg)?;
    let mut product = 1u128;
    for i in lat.minimal_above(lat.bottom()) {
        let m = lat.group(i);
        if m.is_abelian() {
            return Ok(false);
        }
        let id = match identify_simple(m, cfg) {
            Ok(id) => id,
            Err(GroupError::Precondition(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        if !id.is_lie_in(ell) {
            return Ok(false);
        }
        product *= m.order();
    }
    Ok(product == q.order())
}

/// Some abelian normal `N` with `|N| <= d` and `gcd(|N|, ell) = 1` has quotient a
/// product of simple groups of Lie type in characteristic `ell`.
pub fn in_class_lie_ell(
    g: &FiniteGroup,
    ell: u64,
    d: u128,
    cfg: &Config,
) -> Result<bool, GroupError> {
    if g.is_trivial() {
        return Ok(true);
    }
    let lat = normal_lattice(g, cfg)?;
    for m in lat.members() {
        let n = &m.group;
        if !n.is_abelian() || n.order() > d || n.order().gcd(&(ell as u128)) != 1 {
            continue;
        }
        if n.order() == g.order() {
            return Ok(true);
        }
        let (q, _) = quotient(g, n, cfg)?;
        if is_product_of_lie(&q, ell, cfg)? {
            return Ok(true);
        }
    }
    Ok(false)
}
