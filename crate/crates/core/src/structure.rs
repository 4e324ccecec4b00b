//! Normal structure: `G+`, the ℓ-core, the normal lattice, simple quotients and
//! composition factors.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{classes_where, conjugacy_classes, conjugacy_classes_capped, ConjugacyClass};
use crate::config::Config;
use crate::error::GroupError;
use crate::field::{factorize, is_prime};
use crate::group::FiniteGroup;
use crate::homomorphism::quotient;
use crate::perm::Perm;
use crate::taxonomy::{identify_by_order, SimpleGroupId};

const RANDOM_TRIES: usize = 512;

fn check_prime(ell: u64) -> Result<(), GroupError> {
    if is_prime(ell) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(ell))
    }
}

fn order_u64(n: u128) -> u64 {
    u64::try_from(n).expect("group order fits in 64 bits")
}

/// The `ell`-part of an element: the power whose order is the `ell`-part of its order.
pub fn ell_part(x: &Perm, ell: u64) -> Perm {
    let mut m = x.order();
    while m.is_multiple_of(ell) {
        m /= ell;
    }
    x.pow(m as i64)
}

fn is_power_of(mut n: u128, ell: u64) -> bool {
    let ell = ell as u128;
    while n.is_multiple_of(ell) {
        n /= ell;
    }
    n == 1
}

/// The subgroup generated by all elements of `ell`-power order; equivalently the
/// smallest normal subgroup of index prime to `ell`.
pub fn ell_plus(g: &FiniteGroup, ell: u64, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    check_prime(ell)?;
    let seeds: Vec<Perm> = g
        .perm_generators()
        .iter()
        .map(|x| ell_part(x, ell))
        .filter(|y| !y.is_identity())
        .collect();
    let mut n = g.normal_closure_perms(&seeds);
    let mut rng = g.rng(cfg);
    loop {
        if !(g.order() / n.order()).is_multiple_of(ell as u128) {
            return Ok(n);
        }
        let mut found = None;
        for _ in 0..RANDOM_TRIES {
            let y = ell_part(&g.random_perm(&mut rng), ell);
            if !n.contains_perm(&y) {
                found = Some(y);
                break;
            }
        }
        if found.is_none() {
            g.check_enumeration(cfg, "search for an element outside G+")?;
            found = g
                .elements()
                .map(|x| ell_part(&x, ell))
                .find(|y| !n.contains_perm(y));
        }
        let y = found.expect("Cauchy: the quotient has an element of order ell");
        n = g.normal_closure_with(&n, &[y]);
    }
}

/// The largest normal `ell`-subgroup.
pub fn ell_core(g: &FiniteGroup, ell: u64, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    check_prime(ell)?;
    let classes = classes_where(g, cfg, None, |x| {
        !x.is_identity() && is_power_of(x.order() as u128, ell)
    })?;
    let mut core = g.subgroup_from_perms(Vec::new());
    for c in classes {
        if core.contains_perm(&c.representative) {
            continue;
        }
        let closure = g.normal_closure_perms(&[c.representative]);
        if is_power_of(closure.order(), ell) {
            core = core.join(&closure);
        }
    }
    Ok(core)
}

/// A normal subgroup together with the set of classes it contains.
#[derive(Clone, Debug)]
pub struct LatticeMember {
    pub group: FiniteGroup,
    /// Bit `i` is set when class `i` of the owner lies in the member.
    pub mask: FixedBitSet,
}

/// All normal subgroups of a group, sorted by order.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    owner: FiniteGroup,
    classes: Vec<ConjugacyClass>,
    members: Vec<LatticeMember>,
    by_mask: HashMap<FixedBitSet, usize>,
}

fn mask_of(n: &FiniteGroup, classes: &[ConjugacyClass]) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(classes.len());
    for (i, c) in classes.iter().enumerate() {
        m.set(i, n.contains_perm(&c.representative));
    }
    m
}

impl NormalLattice {
    pub fn build(g: &FiniteGroup, cfg: &Config) -> Result<Self, GroupError> {
        let classes = conjugacy_classes_capped(g, cfg, cfg.class_cap)?;
        let closures: Vec<LatticeMember> = classes
            .iter()
            .map(|c| {
                let group = g.normal_closure_perms(std::slice::from_ref(&c.representative));
                let mask = mask_of(&group, &classes);
                LatticeMember { group, mask }
            })
            .collect();
        let mut members: Vec<LatticeMember> = Vec::new();
        let mut by_mask: HashMap<FixedBitSet, usize> = HashMap::new();
        for c in &closures {
            if !by_mask.contains_key(&c.mask) {
                by_mask.insert(c.mask.clone(), members.len());
                members.push(c.clone());
            }
        }
        // Every normal subgroup is a join of class closures, so saturating under
        // joins with single closures reaches all of them.
        let mut i = 0;
        while i < members.len() {
            for c in &closures {
                if c.mask.is_subset(&members[i].mask) {
                    continue;
                }
                let group = members[i].group.join(&c.group);
                let mask = mask_of(&group, &classes);
                if !by_mask.contains_key(&mask) {
                    by_mask.insert(mask.clone(), members.len());
                    members.push(LatticeMember { group, mask });
                }
            }
            i += 1;
        }
        members.sort_by(|a, b| (a.group.order(), &a.mask).cmp(&(b.group.order(), &b.mask)));
        let by_mask = members
            .iter()
            .enumerate()
            .map(|(i, m)| (m.mask.clone(), i))
            .collect();
        Ok(NormalLattice {
            owner: g.clone(),
            classes,
            members,
            by_mask,
        })
    }

    pub fn owner(&self) -> &FiniteGroup {
        &self.owner
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn members(&self) -> &[LatticeMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn group(&self, i: usize) -> &FiniteGroup {
        &self.members[i].group
    }

    pub fn orders(&self) -> Vec<u128> {
        self.members.iter().map(|m| m.group.order()).collect()
    }

    /// Index of the trivial subgroup.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.members.len() - 1
    }

    /// Whether member `i` is contained in member `j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.members[i].mask.is_subset(&self.members[j].mask)
    }

    /// Smallest member containing both.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut union = self.members[i].mask.clone();
        union.union_with(&self.members[j].mask);
        (0..self.members.len())
            .find(|&k| union.is_subset(&self.members[k].mask))
            .expect("the whole group contains everything")
    }

    /// The intersection, which is the member whose classes are the common ones.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut common = self.members[i].mask.clone();
        common.intersect_with(&self.members[j].mask);
        self.by_mask[&common]
    }

    /// The member equal to a given normal subgroup of the owner.
    pub fn position(&self, n: &FiniteGroup) -> Option<usize> {
        self.by_mask
            .get(&mask_of(n, &self.classes))
            .copied()
            .filter(|&i| self.members[i].group.order() == n.order())
    }

    /// Maximal elements among the proper members.
    pub fn maximal_proper(&self) -> Vec<usize> {
        let top = self.top();
        (0..top)
            .filter(|&i| (0..top).all(|j| j == i || !self.le(i, j)))
            .collect()
    }

    /// Members covering member `i`.
    pub fn minimal_above(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.le(i, j))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&j| above.iter().all(|&k| k == j || !self.le(k, j)))
            .collect()
    }
}

pub fn normal_lattice(g: &FiniteGroup, cfg: &Config) -> Result<NormalLattice, GroupError> {
    NormalLattice::build(g, cfg)
}

pub fn maximal_normal_subgroups(
    g: &FiniteGroup,
    cfg: &Config,
) -> Result<Vec<FiniteGroup>, GroupError> {
    let lat = normal_lattice(g, cfg)?;
    Ok(lat
        .maximal_proper()
        .into_iter()
        .map(|i| lat.group(i).clone())
        .collect())
}

fn is_class_cap(e: &GroupError) -> bool {
    matches!(e, GroupError::CapExceeded { what, .. } if *what == "number of conjugacy classes")
}

/// Identifies `g / m` for a maximal normal subgroup `m`.
pub fn identify_factor(
    g: &FiniteGroup,
    m: &FiniteGroup,
    cfg: &Config,
) -> Result<SimpleGroupId, GroupError> {
    let index = g.order() / m.order();
    if let Ok(n) = u64::try_from(index) {
        if is_prime(n) {
            return Ok(SimpleGroupId::cyclic(n));
        }
    }
    identify_by_order(&BigUint::from(index), cfg.tits_group, |k| {
        let (q, _) = quotient(g, m, cfg)?;
        crate::taxonomy::identify::has_element_of_order(&q, k, cfg)
    })
}

/// The simple quotients of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fsq {
    pub ids: BTreeSet<SimpleGroupId>,
    /// Set when the lattice was refused and nonabelian quotients were found greedily.
    pub fast_path: bool,
}

impl Fsq {
    pub fn contains_alias_of(&self, id: &SimpleGroupId) -> bool {
        self.ids.iter().any(|x| x.shares_alias(id))
    }
}

impl fmt::Display for Fsq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.ids.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A maximal normal subgroup reached from `start` by adding class closures in order.
fn greedy_maximal(g: &FiniteGroup, start: &FiniteGroup, closures: &[FiniteGroup]) -> FiniteGroup {
    let mut m = start.clone();
    for c in closures {
        if c.is_subgroup_of(&m) {
            continue;
        }
        let bigger = m.join(c);
        if bigger.order() < g.order() {
            m = bigger;
        }
    }
    m
}

fn class_closures(g: &FiniteGroup, classes: &[ConjugacyClass]) -> Vec<FiniteGroup> {
    classes
        .iter()
        .filter(|c| !c.representative.is_identity())
        .map(|c| g.normal_closure_perms(std::slice::from_ref(&c.representative)))
        .collect()
}

fn abelian_quotient_primes(g: &FiniteGroup) -> Vec<u64> {
    let index = g.order() / g.derived_subgroup().order();
    factorize(order_u64(index))
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

pub fn fsq(g: &FiniteGroup, cfg: &Config) -> Result<Fsq, GroupError> {
    let mut ids: BTreeSet<SimpleGroupId> = abelian_quotient_primes(g)
        .into_iter()
        .map(SimpleGroupId::cyclic)
        .collect();
    if g.is_abelian() {
        return Ok(Fsq {
            ids,
            fast_path: false,
        });
    }
    match normal_lattice(g, cfg) {
        Ok(lat) => {
            for i in lat.maximal_proper() {
                ids.insert(identify_factor(g, lat.group(i), cfg)?);
            }
            Ok(Fsq {
                ids,
                fast_path: false,
            })
        }
        Err(e) if is_class_cap(&e) => {
            let classes = conjugacy_classes(g, cfg)?;
            let closures = class_closures(g, &classes);
            let mut seen: Vec<FiniteGroup> = Vec::new();
            for start in &closures {
                if start.order() == g.order() {
                    continue;
                }
                let m = greedy_maximal(g, start, &closures);
                if seen.iter().any(|s| s.same_as(&m)) {
                    continue;
                }
                let id = identify_factor(g, &m, cfg)?;
                if !id.is_abelian() {
                    ids.insert(id);
                }
                seen.push(m);
            }
            Ok(Fsq {
                ids,
                fast_path: true,
            })
        }
        Err(e) => Err(e),
    }
}

/// How to choose among maximal normal subgroups while building a composition series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest order, then smallest generator encoding.
    Canonical,
    /// Uniformly random choice from a seeded generator.
    Random(u64),
}

/// Subgroups `bottom = K_0 < K_1 < .. < K_r = top` with prime indices, for
/// `bottom` normal in `top` with abelian quotient.
fn abelian_steps(
    top: &FiniteGroup,
    bottom: &FiniteGroup,
    rng: Option<&mut ChaCha8Rng>,
) -> Vec<FiniteGroup> {
    let mut gens = top.perm_generators().to_vec();
    let mut rng = rng;
    if let Some(r) = rng.as_deref_mut() {
        gens.shuffle(r);
    }
    let mut out = vec![bottom.clone()];
    let mut k = bottom.clone();
    for x in gens {
        let m = FiniteGroup::order_modulo(&x, &k);
        if m == 1 {
            continue;
        }
        let mut primes: Vec<u64> = factorize(m)
            .into_iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
            .collect();
        if let Some(r) = rng.as_deref_mut() {
            primes.shuffle(r);
        }
        let mut d = 1u64;
        for p in primes {
            d *= p;
            k = k.extended_by(&[x.pow((m / d) as i64)]);
            out.push(k.clone());
        }
    }
    debug_assert_eq!(k.order(), top.order());
    out
}

pub fn composition_series(g: &FiniteGroup, cfg: &Config) -> Result<Vec<FiniteGroup>, GroupError> {
    composition_series_with(g, cfg, TieBreak::Canonical)
}

pub fn composition_series_with(
    g: &FiniteGroup,
    cfg: &Config,
    tie: TieBreak,
) -> Result<Vec<FiniteGroup>, GroupError> {
    let mut rng = match tie {
        TieBreak::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        TieBreak::Canonical => None,
    };
    let mut series = vec![g.clone()];
    let mut current = g.clone();
    while !current.is_trivial() {
        if current.is_abelian() {
            let trivial = current.subgroup_from_perms(Vec::new());
            let mut steps = abelian_steps(&current, &trivial, rng.as_mut());
            steps.pop();
            steps.reverse();
            series.extend(steps);
            break;
        }
        match normal_lattice(&current, cfg) {
            Ok(lat) => {
                let maximal = lat.maximal_proper();
                let pick = match rng.as_mut() {
                    Some(r) => maximal[r.gen_range(0..maximal.len())],
                    None => *maximal
                        .iter()
                        .min_by_key(|&&i| (lat.group(i).order(), lat.group(i).generator_key()))
                        .expect("a nontrivial group has a proper normal subgroup"),
                };
                current = lat.group(pick).clone();
                series.push(current.clone());
            }
            Err(e) if is_class_cap(&e) => {
                let derived = current.derived_subgroup();
                if derived.order() < current.order() {
                    let mut steps = abelian_steps(&current, &derived, rng.as_mut());
                    steps.pop();
                    steps.reverse();
                    series.extend(steps);
                    current = derived;
                } else {
                    let classes = conjugacy_classes(&current, cfg)?;
                    let mut closures = class_closures(&current, &classes);
                    if let Some(r) = rng.as_mut() {
                        closures.shuffle(r);
                    }
                    let trivial = current.subgroup_from_perms(Vec::new());
                    current = greedy_maximal(&current, &trivial, &closures);
                    series.push(current.clone());
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(series)
}

/// Composition factors with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JhMultiset(BTreeMap<SimpleGroupId, usize>);

impl JhMultiset {
    pub fn insert(&mut self, id: SimpleGroupId) {
        *self.0.entry(id).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, id: &SimpleGroupId) -> usize {
        self.0.get(id).copied().unwrap_or(0)
    }

    /// Number of composition factors.
    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn set(&self) -> BTreeSet<SimpleGroupId> {
        self.0.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimpleGroupId, &usize)> {
        self.0.iter()
    }

    /// Multiset union.
    pub fn union(&self, other: &JhMultiset) -> JhMultiset {
        let mut out = self.clone();
        for (id, &k) in &other.0 {
            *out.0.entry(id.clone()).or_insert(0) += k;
        }
        out
    }
}

impl fmt::Display for JhMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(id, &k)| {
                if k == 1 {
                    id.to_string()
                } else {
                    format!("{id}^{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn jh(g: &FiniteGroup, cfg: &Config) -> Result<JhMultiset, GroupError> {
    jh_with(g, cfg, TieBreak::Canonical)
}

pub fn jh_with(g: &FiniteGroup, cfg: &Config, tie: TieBreak) -> Result<JhMultiset, GroupError> {
    let series = composition_series_with(g, cfg, tie)?;
    let mut out = JhMultiset::default();
    for pair in series.windows(2) {
        out.insert(identify_factor(&pair[0], &pair[1], cfg)?);
    }
    Ok(out)
}

/// Invariant factors `d_1 | d_2 | ..` of `G / [G, G]`.
pub fn abelianization(g: &FiniteGroup, cfg: &Config) -> Result<Vec<u128>, GroupError> {
    let derived = g.derived_subgroup();
    let index = g.order() / derived.order();
    if index == 1 {
        return Ok(Vec::new());
    }
    let a = if derived.is_trivial() {
        g.clone()
    } else {
        quotient(g, &derived, cfg)?.0
    };
    abelian_invariants(&a, cfg)
}

/// Invariant factors of an abelian group, by counting elements of each order.
pub fn abelian_invariants(a: &FiniteGroup, cfg: &Config) -> Result<Vec<u128>, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::Precondition("group is not abelian".into()));
    }
    if a.is_trivial() {
        return Ok(Vec::new());
    }
    a.check_enumeration(cfg, "abelian invariants")?;
    let orders: Vec<u64> = a.elements().map(|x| x.order()).collect();
    invariant_factors(order_u64(a.order()), &orders)
        .map(|v| v.into_iter().map(u128::from).collect())
        .ok_or_else(|| {
            GroupError::Precondition("element counts inconsistent with an abelian group".into())
        })
}

/// Invariant factors of an abelian group from its element orders.
fn invariant_factors(order: u64, element_orders: &[u64]) -> Option<Vec<u64>> {
    // exponents[p] = cyclic p-factor exponents, largest first
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    let mut primes = Vec::new();
    for (p, e) in factorize(order) {
        // ranks[k] = number of cyclic factors with exponent > k
        let mut ranks = Vec::new();
        let mut prev = 1u64;
        for k in 1..=e {
            let pk = p.pow(k);
            let count = element_orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let ratio = count / prev;
            let mut r = 0;
            let mut x = 1u64;
            while x < ratio {
                x *= p;
                r += 1;
            }
            if x != ratio || !count.is_multiple_of(prev) {
                return None;
            }
            ranks.push(r);
            prev = count;
        }
        let mut exps = Vec::new();
        for k in 0..ranks.len() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in next..ranks[k] {
                exps.push(k as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
        primes.push(p);
    }
    let t = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; t];
    for (p, exps) in primes.iter().zip(&per_prime) {
        for (i, &e) in exps.iter().enumerate() {
            out[t - 1 - i] *= p.pow(e);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> FiniteGroup {
        let cyc: Vec<usize> = (1..=n).collect();
        FiniteGroup::from_perms(
            n,
            vec![
                Perm::from_cycles(n, &[&[1, 2]]).unwrap(),
                Perm::from_cycles(n, &[&cyc]).unwrap(),
            ],
        )
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let cyc: Vec<usize> = (1..=n).collect();
        FiniteGroup::from_perms(n, vec![Perm::from_cycles(n, &[&cyc]).unwrap()])
    }

    #[test]
    fn s4_lattice() {
        let lat = normal_lattice(&sym(4), &Config::default()).unwrap();
        assert_eq!(lat.orders(), vec![1, 4, 12, 24]);
        assert_eq!(lat.maximal_proper(), vec![2]);
        assert_eq!(lat.meet(1, 2), 1);
        assert_eq!(lat.join(1, 2), 2);
    }

    #[test]
    fn ell_plus_and_core_on_s4_s5() {
        let cfg = Config::default();
        assert_eq!(ell_plus(&sym(5), 5, &cfg).unwrap().order(), 60);
        assert_eq!(ell_plus(&sym(4), 3, &cfg).unwrap().order(), 12);
        assert_eq!(ell_plus(&sym(4), 2, &cfg).unwrap().order(), 24);
        assert_eq!(ell_core(&sym(4), 2, &cfg).unwrap().order(), 4);
        assert_eq!(ell_core(&sym(4), 3, &cfg).unwrap().order(), 1);
        assert!(ell_plus(&sym(4), 4, &cfg).is_err());
    }

    #[test]
    fn jh_of_s4() {
        let j = jh(&sym(4), &Config::default()).unwrap();
        assert_eq!(j.to_string(), "Z/2^3,Z/3");
        assert_eq!(j.len(), 4);
    }

    #[test]
    fn fsq_examples() {
        let cfg = Config::default();
        assert_eq!(fsq(&sym(5), &cfg).unwrap().to_string(), "Z/2");
        assert_eq!(fsq(&cyclic(6), &cfg).unwrap().to_string(), "Z/2,Z/3");
    }

    #[test]
    fn invariant_factor_extraction() {
        // Z/2 x Z/4 has element orders 1,2,2,2,4,4,4,4
        assert_eq!(
            invariant_factors(8, &[1, 2, 2, 2, 4, 4, 4, 4]),
            Some(vec![2, 4])
        );
        assert_eq!(invariant_factors(6, &[1, 2, 3, 3, 6, 6]), Some(vec![6]));
    }
}
