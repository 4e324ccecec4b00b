//! Generator-presented finite groups backed by a stabilizer chain.
//!
//! Matrix groups are handled through their faithful action on the nonzero row
//! vectors of `GF(q)^d`; every algorithm below runs on permutations.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::StabChain;
use crate::config::Config;
use crate::element::GroupElement;
use crate::error::GroupError;
use crate::field::Field;
use crate::matrix::VectorSpace;
use crate::perm::Perm;

/// What the elements of a group are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Perm { degree: usize },
    Matrix(VectorSpace),
}

impl Domain {
    pub fn perm(degree: usize) -> Self {
        Domain::Perm { degree }
    }

    pub fn matrix(dim: usize, q: u32) -> Result<Self, GroupError> {
        Ok(Domain::Matrix(VectorSpace::new(
            dim,
            Arc::new(Field::new(q)?),
        )))
    }

    /// Degree of the permutation representation used internally.
    pub fn perm_degree(&self) -> u64 {
        match self {
            Domain::Perm { degree } => *degree as u64,
            Domain::Matrix(space) => space.nonzero_count(),
        }
    }

    fn check_element(&self, g: &GroupElement) -> Result<(), GroupError> {
        match (self, g) {
            (Domain::Perm { degree }, GroupElement::Perm(p)) if p.degree() == *degree => Ok(()),
            (Domain::Matrix(space), GroupElement::Matrix(m))
                if m.matrix.dim() == space.dim && m.field.order() == space.field.order() =>
            {
                Ok(())
            }
            _ => Err(GroupError::DomainMismatch(format!(
                "{} does not belong to {}",
                g.kind_label(),
                self
            ))),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Perm { degree } => write!(f, "perm {degree}"),
            Domain::Matrix(space) => write!(f, "matrix {} {}", space.dim, space.field.order()),
        }
    }
}

struct GroupData {
    domain: Domain,
    gens: Vec<GroupElement>,
    perm_gens: Vec<Perm>,
    chain: StabChain,
}

/// A finalized group: immutable, cheap to clone, safe to share across threads.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl FiniteGroup {
    /// Builds a group from generators; an empty list gives the trivial group.
    pub fn build(domain: Domain, gens: Vec<GroupElement>) -> Result<Self, GroupError> {
        Self::build_with(domain, gens, &Config::default())
    }

    pub fn build_with(
        domain: Domain,
        gens: Vec<GroupElement>,
        cfg: &Config,
    ) -> Result<Self, GroupError> {
        let degree = domain.perm_degree();
        if degree > cfg.degree_cap as u64 {
            return Err(GroupError::cap(
                "permutation degree",
                degree,
                cfg.degree_cap as u64,
            ));
        }
        for g in &gens {
            domain.check_element(g)?;
            if let GroupElement::Matrix(m) = g {
                if m.matrix.det(&m.field) == 0 {
                    return Err(GroupError::MalformedElement("singular matrix".into()));
                }
            }
        }
        let perm_gens: Vec<Perm> = gens.iter().map(|g| to_perm_unchecked(&domain, g)).collect();
        let chain = StabChain::new(degree as usize, &perm_gens);
        Ok(FiniteGroup {
            data: Arc::new(GroupData {
                domain,
                gens,
                perm_gens,
                chain,
            }),
        })
    }

    /// A permutation group from trusted generators.
    pub fn from_perms(degree: usize, perms: Vec<Perm>) -> Self {
        let chain = StabChain::new(degree, &perms);
        Self::from_parts(Domain::perm(degree), perms, chain)
    }

    pub fn trivial(domain: Domain) -> Self {
        let degree = domain.perm_degree() as usize;
        Self::from_parts(domain, Vec::new(), StabChain::trivial(degree))
    }

    fn from_parts(domain: Domain, perm_gens: Vec<Perm>, chain: StabChain) -> Self {
        let gens = perm_gens
            .iter()
            .map(|p| from_perm_unchecked(&domain, p))
            .collect();
        FiniteGroup {
            data: Arc::new(GroupData {
                domain,
                gens,
                perm_gens,
                chain,
            }),
        }
    }

    /// A subgroup on the same domain generated by permutations of the internal representation.
    pub fn subgroup_from_perms(&self, perms: Vec<Perm>) -> Self {
        let perms: Vec<Perm> = perms.into_iter().filter(|p| !p.is_identity()).collect();
        let chain = StabChain::new(self.degree(), &perms);
        Self::from_parts(self.data.domain.clone(), perms, chain)
    }

    fn subgroup_from_chain(&self, perms: Vec<Perm>, chain: StabChain) -> Self {
        Self::from_parts(self.data.domain.clone(), perms, chain)
    }

    pub fn domain(&self) -> &Domain {
        &self.data.domain
    }

    pub fn degree(&self) -> usize {
        self.data.chain.degree()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.data.gens
    }

    pub fn perm_generators(&self) -> &[Perm] {
        &self.data.perm_gens
    }

    pub fn chain(&self) -> &StabChain {
        &self.data.chain
    }

    pub fn order(&self) -> u128 {
        self.data.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity_perm(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn to_perm(&self, g: &GroupElement) -> Result<Perm, GroupError> {
        self.data.domain.check_element(g)?;
        Ok(to_perm_unchecked(&self.data.domain, g))
    }

    pub fn to_element(&self, p: &Perm) -> GroupElement {
        from_perm_unchecked(&self.data.domain, p)
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &GroupElement) -> Result<bool, GroupError> {
        Ok(self.data.chain.contains(&self.to_perm(g)?))
    }

    pub fn contains_perm(&self, p: &Perm) -> bool {
        self.data.chain.contains(p)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.data.perm_gens;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if g[i].compose(&g[j]) != g[j].compose(&g[i]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree() == other.degree()
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.data.perm_gens.iter().all(|p| other.contains_perm(p))
    }

    /// Same set of elements.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Conjugates of generators by the generators of `ambient` stay inside.
    pub fn is_normal_in(&self, ambient: &FiniteGroup) -> bool {
        self.data.perm_gens.iter().all(|h| {
            ambient
                .perm_generators()
                .iter()
                .all(|g| self.contains_perm(&h.conjugate_by(g)))
        })
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &[GroupElement]) -> Result<FiniteGroup, GroupError> {
        let mut perms = Vec::with_capacity(s.len());
        for g in s {
            let p = self.to_perm(g)?;
            if !self.contains_perm(&p) {
                return Err(GroupError::NotInGroup(format!("{g:?}")));
            }
            perms.push(p);
        }
        Ok(self.normal_closure_perms(&perms))
    }

    /// Normal closure of elements already known to lie in the group.
    pub fn normal_closure_perms(&self, s: &[Perm]) -> FiniteGroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = StabChain::trivial(self.degree());
        for p in s {
            if chain.add_generator(p) {
                gens.push(p.clone());
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let h = gens[i].clone();
            for g in self.data.perm_gens.iter() {
                let c = h.conjugate_by(g);
                if chain.add_generator(&c) {
                    gens.push(c);
                }
            }
            i += 1;
        }
        self.subgroup_from_chain(gens, chain)
    }

    /// Normal closure in `self` of the subgroup `sub` together with extra elements.
    pub fn normal_closure_with(&self, sub: &FiniteGroup, extra: &[Perm]) -> FiniteGroup {
        let mut s = sub.perm_generators().to_vec();
        s.extend_from_slice(extra);
        self.normal_closure_perms(&s)
    }

    /// Subgroup generated by both groups (normal if both are).
    pub fn join(&self, other: &FiniteGroup) -> FiniteGroup {
        let mut chain = self.data.chain.clone();
        let mut gens = self.data.perm_gens.clone();
        for p in other.perm_generators() {
            if chain.add_generator(p) {
                gens.push(p.clone());
            }
        }
        self.subgroup_from_chain(gens, chain)
    }

    /// Subgroup generated by the group and extra elements.
    pub fn extended_by(&self, extra: &[Perm]) -> FiniteGroup {
        let mut chain = self.data.chain.clone();
        let mut gens = self.data.perm_gens.clone();
        for p in extra {
            if chain.add_generator(p) {
                gens.push(p.clone());
            }
        }
        self.subgroup_from_chain(gens, chain)
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> FiniteGroup {
        let g = &self.data.perm_gens;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = g[i].commutator(&g[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_perms(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Elements commuting with every generator.
    pub fn center(&self, cfg: &Config) -> Result<FiniteGroup, GroupError> {
        if self.is_abelian() {
            return Ok(self.clone());
        }
        self.check_enumeration(cfg, "center")?;
        let gens = &self.data.perm_gens;
        let mut chain = StabChain::trivial(self.degree());
        let mut found = Vec::new();
        for r in 0..self.order() {
            let x = self.data.chain.unrank(r);
            if chain.contains(&x) {
                continue;
            }
            if gens.iter().all(|g| x.compose(g) == g.compose(&x)) {
                chain.add_generator(&x);
                found.push(x);
            }
        }
        Ok(self.subgroup_from_chain(found, chain))
    }

    pub(crate) fn check_enumeration(
        &self,
        cfg: &Config,
        what: &'static str,
    ) -> Result<(), GroupError> {
        if self.order() > cfg.enumeration_cap {
            return Err(GroupError::cap(what, self.order(), cfg.enumeration_cap));
        }
        Ok(())
    }

    /// All elements in rank order.
    pub fn elements(&self) -> impl Iterator<Item = Perm> + '_ {
        (0..self.order()).map(move |r| self.data.chain.unrank(r))
    }

    pub fn rng(&self, cfg: &Config) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(cfg.seed ^ (self.order() as u64).rotate_left(17))
    }

    pub fn random_perm(&self, rng: &mut ChaCha8Rng) -> Perm {
        self.data.chain.random_element(rng)
    }

    /// Order of the coset `g N` in `G / N` for a normal subgroup `n`.
    pub fn order_modulo(g: &Perm, n: &FiniteGroup) -> u64 {
        let full = g.order();
        let mut divisors: Vec<u64> = (1..=full).filter(|d| full.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            if n.contains_perm(&g.pow(d as i64)) {
                return d;
            }
        }
        full
    }

    /// Matrix groups only: the same group as a permutation group on nonzero vectors.
    pub fn matrix_to_permutation(&self, cfg: &Config) -> Result<FiniteGroup, GroupError> {
        match &self.data.domain {
            Domain::Perm { .. } => Err(GroupError::DomainMismatch(
                "matrix_to_permutation needs a matrix group".into(),
            )),
            Domain::Matrix(space) => {
                let degree = space.nonzero_count();
                if degree > cfg.degree_cap as u64 {
                    return Err(GroupError::cap(
                        "permutation degree",
                        degree,
                        cfg.degree_cap as u64,
                    ));
                }
                Ok(FiniteGroup {
                    data: Arc::new(GroupData {
                        domain: Domain::perm(degree as usize),
                        gens: self
                            .data
                            .perm_gens
                            .iter()
                            .cloned()
                            .map(GroupElement::Perm)
                            .collect(),
                        perm_gens: self.data.perm_gens.clone(),
                        chain: self.data.chain.clone(),
                    }),
                })
            }
        }
    }

    /// Lexicographically ordered encoding of the generators, used for tie-breaking.
    pub fn generator_key(&self) -> Vec<Vec<u32>> {
        let mut key: Vec<Vec<u32>> = self
            .data
            .perm_gens
            .iter()
            .map(|p| p.images().to_vec())
            .collect();
        key.sort();
        key
    }

    /// A small generating set chosen greedily from the strong generators.
    pub fn reduced_generators(&self) -> Vec<Perm> {
        let mut chain = StabChain::trivial(self.degree());
        let mut out = Vec::new();
        let mut candidates = self.data.perm_gens.clone();
        candidates.extend(self.data.chain.strong_generators());
        for p in candidates {
            if chain.order() == self.order() {
                break;
            }
            if chain.add_generator(&p) {
                out.push(p);
            }
        }
        out
    }
}

fn to_perm_unchecked(domain: &Domain, g: &GroupElement) -> Perm {
    match (domain, g) {
        (_, GroupElement::Perm(p)) => p.clone(),
        (Domain::Matrix(space), GroupElement::Matrix(m)) => space.matrix_to_perm(&m.matrix),
        (Domain::Perm { .. }, GroupElement::Matrix(_)) => unreachable!("checked by caller"),
    }
}

fn from_perm_unchecked(domain: &Domain, p: &Perm) -> GroupElement {
    match domain {
        Domain::Perm { .. } => GroupElement::Perm(p.clone()),
        Domain::Matrix(space) => GroupElement::matrix(space.perm_to_matrix(p), space.field.clone()),
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {}, {} gens)",
            self.data.domain,
            self.order(),
            self.data.gens.len()
        )
    }
}
