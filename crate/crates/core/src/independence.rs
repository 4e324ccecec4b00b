//! Independence of families of finite groups indexed by primes.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::config::Config;
use crate::error::GroupError;
use crate::field::is_prime;
use crate::group::FiniteGroup;
use crate::homomorphism::quotient;
use crate::perm::Perm;
use crate::structure::{abelian_invariants, ell_plus, fsq, jh, Fsq};
use crate::taxonomy::SimpleGroupId;

/// Groups `G_ell` for strictly increasing primes `ell`.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    factors: Vec<(u64, FiniteGroup)>,
}

impl FamilySpec {
    pub fn new(factors: Vec<(u64, FiniteGroup)>) -> Result<Self, GroupError> {
        for (i, (ell, _)) in factors.iter().enumerate() {
            if !is_prime(*ell) {
                return Err(GroupError::NotPrime(*ell));
            }
            if i > 0 && factors[i - 1].0 >= *ell {
                return Err(GroupError::Precondition(format!(
                    "primes must be strictly increasing, found {} then {ell}",
                    factors[i - 1].0
                )));
            }
        }
        Ok(FamilySpec { factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|(l, _)| *l).collect()
    }

    pub fn factors(&self) -> &[(u64, FiniteGroup)] {
        &self.factors
    }

    pub fn group(&self, i: usize) -> &FiniteGroup {
        &self.factors[i].1
    }

    /// Order of the full product.
    pub fn product_order(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, (_, g)| acc.checked_mul(g.order()))
    }

    fn offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, (_, g)| {
                let o = *acc;
                *acc += g.degree();
                Some(o)
            })
            .collect()
    }

    fn total_degree(&self) -> usize {
        self.factors.iter().map(|(_, g)| g.degree()).sum()
    }

    /// Simple quotients of every factor, computed in parallel.
    pub fn fsqs(&self, cfg: &Config) -> Result<Vec<Fsq>, GroupError> {
        self.factors
            .par_iter()
            .map(|(ell, g)| fsq(g, cfg).map_err(|e| GroupError::at_prime(*ell, e)))
            .collect()
    }
}

/// A subgroup of the product of a family, generated by tuples with one component per factor.
#[derive(Clone, Debug)]
pub struct ProductSubgroup {
    family: FamilySpec,
    tuples: Vec<Vec<Perm>>,
    group: FiniteGroup,
}

impl ProductSubgroup {
    pub fn new(family: FamilySpec, tuples: Vec<Vec<Perm>>) -> Result<Self, GroupError> {
        for t in &tuples {
            if t.len() != family.len() {
                return Err(GroupError::Precondition(format!(
                    "tuple has {} components for {} factors",
                    t.len(),
                    family.len()
                )));
            }
            for (x, (ell, g)) in t.iter().zip(family.factors()) {
                if !g.contains_perm(x) {
                    return Err(GroupError::at_prime(
                        *ell,
                        GroupError::NotInGroup(format!("{x}")),
                    ));
                }
            }
        }
        let total = family.total_degree();
        let offsets = family.offsets();
        let gens: Vec<Perm> = tuples
            .iter()
            .map(|t| {
                t.iter()
                    .zip(&offsets)
                    .fold(Perm::identity(total.max(1)), |acc, (x, &off)| {
                        acc.compose(&x.shifted(off, total.max(1)))
                    })
            })
            .collect();
        let group = FiniteGroup::from_perms(total.max(1), gens);
        Ok(ProductSubgroup {
            family,
            tuples,
            group,
        })
    }

    /// The whole product, generated by each factor's generators padded with identities.
    pub fn full_product(family: FamilySpec) -> Result<Self, GroupError> {
        let mut tuples = Vec::new();
        for (i, (_, g)) in family.factors().iter().enumerate() {
            for p in g.perm_generators() {
                let mut t: Vec<Perm> = family
                    .factors()
                    .iter()
                    .map(|(_, h)| h.identity_perm())
                    .collect();
                t[i] = p.clone();
                tuples.push(t);
            }
        }
        Self::new(family, tuples)
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn tuples(&self) -> &[Vec<Perm>] {
        &self.tuples
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Image of the projection to factor `i`.
    pub fn projection(&self, i: usize) -> FiniteGroup {
        let g = self.family.group(i);
        g.subgroup_from_perms(self.tuples.iter().map(|t| t[i].clone()).collect())
    }

    pub fn projections_surjective(&self) -> Vec<bool> {
        (0..self.family.len())
            .map(|i| self.projection(i).order() == self.family.group(i).order())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    Criterion,
    BothAgree,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute-force",
            Method::Criterion => "criterion",
            Method::BothAgree => "both-agree",
        })
    }
}

/// Two primes whose groups share a simple quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pair: (u64, u64),
    pub id: SimpleGroupId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub gt_independent: Option<bool>,
    pub independent: Option<bool>,
    pub witness: Option<Witness>,
    pub method: Method,
    pub projections_surjective: Vec<bool>,
    /// Set when some simple quotients were found on the fast path.
    pub fast_path: bool,
}

impl IndependenceReport {
    /// `key=value` records.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(gti) = self.gt_independent {
            let mut line = format!("gt_independent={gti}");
            if let Some(w) = &self.witness {
                line.push_str(&format!(
                    " witness_pair={},{} witness={}",
                    w.pair.0, w.pair.1, w.id
                ));
            }
            out.push(line);
        }
        if let Some(ind) = self.independent {
            let surj: Vec<&str> = self
                .projections_surjective
                .iter()
                .map(|&b| if b { "true" } else { "false" })
                .collect();
            out.push(format!(
                "independent={ind} projections_surjective={}",
                surj.join(",")
            ));
        }
        out.push(format!("method={}", self.method));
        if self.fast_path {
            out.push("fsq_mode=fast-path".into());
        }
        out
    }
}

/// First shared simple quotient over pairs of primes, in lexicographic order.
fn first_common(primes: &[u64], sets: &[Fsq]) -> Option<Witness> {
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            for id in &sets[i].ids {
                if sets[j].contains_alias_of(id) {
                    return Some(Witness {
                        pair: (primes[i], primes[j]),
                        id: id.clone(),
                    });
                }
            }
        }
    }
    None
}

/// No two factors share a finite simple quotient.
pub fn is_gt_independent(
    family: &FamilySpec,
    cfg: &Config,
) -> Result<IndependenceReport, GroupError> {
    let sets = family.fsqs(cfg)?;
    let witness = first_common(&family.primes(), &sets);
    Ok(IndependenceReport {
        gt_independent: Some(witness.is_none()),
        independent: None,
        witness,
        method: Method::Criterion,
        projections_surjective: Vec::new(),
        fast_path: sets.iter().any(|s| s.fast_path),
    })
}

/// Whether `h` is the whole product, decided by its order.
pub fn is_independent(h: &ProductSubgroup, cfg: &Config) -> Result<IndependenceReport, GroupError> {
    let family = h.family();
    let full = family
        .product_order()
        .ok_or_else(|| GroupError::cap("product order", u128::MAX, cfg.product_budget))?;
    if full > cfg.product_budget {
        return Err(GroupError::cap("product order", full, cfg.product_budget));
    }
    Ok(IndependenceReport {
        gt_independent: None,
        independent: Some(h.group().order() == full),
        witness: None,
        method: Method::BruteForce,
        projections_surjective: h.projections_surjective(),
        fast_path: false,
    })
}

/// The inductive argument that a subdirect product of groups with pairwise
/// disjoint simple quotients is the whole product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreCertificate {
    pub steps: Vec<String>,
}

/// Certifies `h` equals the whole product from surjective projections and
/// group-theoretic independence, without computing the order of `h`.
///
/// Step `k` joins factor `k` to the product `P` of the later ones: `h` maps onto
/// both, and `FSQ(P)` lies in the union of the later `FSQ`s, which shares nothing
/// with `FSQ(G_k)`; a subdirect product with no common simple quotient is full.
pub fn serre_reduction(h: &ProductSubgroup, cfg: &Config) -> Result<SerreCertificate, GroupError> {
    let family = h.family();
    let primes = family.primes();
    for (i, ok) in h.projections_surjective().into_iter().enumerate() {
        if !ok {
            return Err(GroupError::Precondition(format!(
                "projection to the factor at {} is not surjective",
                primes[i]
            )));
        }
    }
    let sets = family.fsqs(cfg)?;
    if let Some(w) = first_common(&primes, &sets) {
        return Err(GroupError::Precondition(format!(
            "not group theoretically independent: {} and {} share {}",
            w.pair.0, w.pair.1, w.id
        )));
    }
    let mut steps = Vec::new();
    for k in (0..family.len().saturating_sub(1)).rev() {
        let later: Vec<String> = primes[k + 1..].iter().map(|p| p.to_string()).collect();
        steps.push(format!(
            "step={} factor={} rest={} fsq={} common=none",
            family.len() - 1 - k,
            primes[k],
            later.join(","),
            sets[k]
        ));
    }
    Ok(SerreCertificate { steps })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoingUpReport {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub implication: bool,
    /// Whether the quotient examined was `G/N` (true) or `G+/N` (false, when `N` is not normal in `G`).
    pub quotient_of_g: bool,
    pub jh_quotient: String,
}

impl GoingUpReport {
    pub fn lines(&self) -> Vec<String> {
        vec![
            format!(
                "quotient={} jh_quotient={}",
                if self.quotient_of_g { "G/N" } else { "G+/N" },
                self.jh_quotient
            ),
            format!(
                "hypothesis={} conclusion={} implication={}",
                self.hypothesis, self.conclusion, self.implication
            ),
        ]
    }
}

/// Evaluates, for one instance, "if no composition factor of `G/N` is of Lie type
/// in characteristic `ell`, then `N` is generated by its `ell`-elements".
pub fn goingup_check(
    g: &FiniteGroup,
    ell: u64,
    n: &FiniteGroup,
    jprime: u64,
    cfg: &Config,
) -> Result<GoingUpReport, GroupError> {
    if ell <= jprime {
        return Err(GroupError::Precondition(format!(
            "ell = {ell} must exceed {jprime}"
        )));
    }
    let gplus = ell_plus(g, ell, cfg)?;
    if !n.is_subgroup_of(&gplus) {
        return Err(GroupError::NotSubgroup);
    }
    if !n.is_normal_in(&gplus) {
        return Err(GroupError::NotNormal);
    }
    let quotient_of_g = n.is_normal_in(g);
    let ambient = if quotient_of_g { g } else { &gplus };
    let (q, _) = quotient(ambient, n, cfg)?;
    let factors = jh(&q, cfg)?;
    let hypothesis = !factors.set().iter().any(|id| id.is_lie_in(ell));
    let conclusion = ell_plus(n, ell, cfg)?.order() == n.order();
    Ok(GoingUpReport {
        hypothesis,
        conclusion,
        implication: !hypothesis || conclusion,
        quotient_of_g,
        jh_quotient: factors.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtPropReport {
    pub quotient_order: u128,
    pub abelian: bool,
    pub coprime: bool,
    pub invariant_factors: Vec<u128>,
}

impl GtPropReport {
    pub fn passed(&self) -> bool {
        self.abelian && self.coprime
    }

    pub fn lines(&self) -> Vec<String> {
        let inv: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| d.to_string())
            .collect();
        vec![
            format!(
                "quotient_order={} abelian={} coprime={} invariant_factors=[{}]",
                self.quotient_order,
                self.abelian,
                self.coprime,
                inv.join(",")
            ),
            format!("passed={} connected=declared", self.passed()),
        ]
    }
}

/// Checks that `G / G+` is abelian of order prime to `ell` for a group declared
/// to be the full point group of a connected algebraic group.
pub fn gtprop_check(g: &FiniteGroup, ell: u64, cfg: &Config) -> Result<GtPropReport, GroupError> {
    let gplus = ell_plus(g, ell, cfg)?;
    let quotient_order = g.order() / gplus.order();
    let gens = g.perm_generators();
    let abelian = gens
        .iter()
        .all(|a| gens.iter().all(|b| gplus.contains_perm(&a.commutator(b))));
    let coprime = quotient_order.gcd(&(ell as u128)) == 1;
    let invariant_factors = if abelian {
        let (q, _) = quotient(g, &gplus, cfg)?;
        abelian_invariants(&q, cfg)?
    } else {
        Vec::new()
    };
    Ok(GtPropReport {
        quotient_order,
        abelian,
        coprime,
        invariant_factors,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub certified: bool,
    /// One record per containment or disjointness check performed.
    pub checks: Vec<String>,
    /// The prime and quotient that failed, when not certified.
    pub refusal: Option<(u64, SimpleGroupId)>,
}

impl Certificate {
    pub fn lines(&self) -> Vec<String> {
        let mut out = self.checks.clone();
        match &self.refusal {
            Some((ell, id)) => out.push(format!("certified=false refused_at={ell} offending={id}")),
            None => out.push(format!("certified={}", self.certified)),
        }
        out
    }
}

/// Checks `FSQ(G_ell)` lies in the Lie-type class of characteristic `ell` together
/// with `Z/ell` (only `Z/ell` when `ell <= ell0`), then pairwise disjointness.
pub fn certify_family(
    family: &FamilySpec,
    ell0: u64,
    cfg: &Config,
) -> Result<Certificate, GroupError> {
    let sets = family.fsqs(cfg)?;
    let primes = family.primes();
    let mut checks = Vec::new();
    for (&ell, set) in primes.iter().zip(&sets) {
        let small = ell <= ell0;
        for id in &set.ids {
            let ok = if small {
                id.cyclic_prime() == Some(ell)
            } else {
                id.cyclic_prime() == Some(ell) || (!id.is_abelian() && id.is_lie_in(ell))
            };
            let class = if small {
                format!("{{Z/{ell}}}")
            } else {
                format!("Lie_{ell}+Z/{ell}")
            };
            checks.push(format!(
                "containment prime={ell} quotient={id} class={class} ok={ok}"
            ));
            if !ok {
                return Ok(Certificate {
                    certified: false,
                    checks,
                    refusal: Some((ell, id.clone())),
                });
            }
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let shared = sets[i].ids.iter().find(|id| sets[j].contains_alias_of(id));
            let (a, b) = (primes[i], primes[j]);
            checks.push(format!("disjoint primes={a},{b} ok={}", shared.is_none()));
            if let Some(id) = shared {
                return Ok(Certificate {
                    certified: false,
                    checks,
                    refusal: Some((b, id.clone())),
                });
            }
        }
    }
    Ok(Certificate {
        certified: true,
        checks,
        refusal: None,
    })
}
