//! Homomorphisms given by generator images, and quotients on coset spaces.

use std::collections::HashMap;

use crate::chain::StabChain;
use crate::config::Config;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// A verified homomorphism `source -> target`, determined by the images of the
/// source's generators.
///
/// The map is checked through its graph `{(g, f(g))}` acting on the disjoint union
/// of both domains: Schreier-Sims on the graph processes every Schreier generator,
/// and the assignment extends to a homomorphism exactly when the graph is no larger
/// than the source.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<Perm>,
    graph: StabChain,
}

impl Homomorphism {
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        images: Vec<Perm>,
    ) -> Result<Self, GroupError> {
        if images.len() != source.perm_generators().len() {
            return Err(GroupError::Precondition(format!(
                "{} generator images for {} generators",
                images.len(),
                source.perm_generators().len()
            )));
        }
        for p in &images {
            if !target.contains_perm(p) {
                return Err(GroupError::NotInGroup(format!("{p}")));
            }
        }
        let n = source.degree();
        let total = n + target.degree();
        let graph_gens: Vec<Perm> = source
            .perm_generators()
            .iter()
            .zip(&images)
            .map(|(s, t)| graph_element(s, t, n, total))
            .collect();
        let graph = StabChain::new(total, &graph_gens);
        if graph.order() != source.order() {
            return Err(GroupError::Precondition(
                "generator images do not extend to a homomorphism".into(),
            ));
        }
        Ok(Homomorphism {
            source,
            target,
            images,
            graph,
        })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.images
    }

    /// Image of a source element.
    pub fn apply(&self, g: &Perm) -> Result<Perm, GroupError> {
        if !self.source.contains_perm(g) {
            return Err(GroupError::NotInGroup(format!("{g}")));
        }
        let n = self.source.degree();
        let total = n + self.target.degree();
        let lifted = g.extend_to(total);
        let (residue, _) = self.graph.strip_from(&lifted, 0);
        // residue = (1, f(g)^-1)
        Ok(residue.restricted(n, self.target.degree()).inverse())
    }

    pub fn image(&self) -> FiniteGroup {
        self.target.subgroup_from_perms(self.images.clone())
    }

    pub fn kernel_order(&self) -> u128 {
        self.source.order() / self.image().order()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }
}

fn graph_element(s: &Perm, t: &Perm, n: usize, total: usize) -> Perm {
    let mut images: Vec<u32> = s.images().to_vec();
    images.extend(t.images().iter().map(|&x| x + n as u32));
    debug_assert_eq!(images.len(), total);
    Perm::from_images_unchecked(images)
}

/// `G / N` acting on the right cosets of `N`, with the projection.
pub fn quotient(
    g: &FiniteGroup,
    n: &FiniteGroup,
    cfg: &Config,
) -> Result<(FiniteGroup, Homomorphism), GroupError> {
    if !n.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    if !n.is_normal_in(g) {
        return Err(GroupError::NotNormal);
    }
    let index = g.order() / n.order();
    if index > cfg.coset_cap as u128 {
        return Err(GroupError::cap(
            "number of cosets",
            index,
            cfg.coset_cap as u128,
        ));
    }
    let index = index as usize;
    let chain = n.chain();
    let gens = g.perm_generators();
    let mut reps: Vec<Perm> = vec![chain.canonical_coset_rep(&g.identity_perm())];
    let mut lookup: HashMap<Perm, u32> = HashMap::new();
    lookup.insert(reps[0].clone(), 0);
    let mut action: Vec<Vec<u32>> = vec![Vec::with_capacity(index); gens.len()];
    let mut k = 0;
    while k < reps.len() {
        for (j, s) in gens.iter().enumerate() {
            let c = chain.canonical_coset_rep(&reps[k].compose(s));
            let next = reps.len() as u32;
            let idx = *lookup.entry(c.clone()).or_insert_with(|| {
                reps.push(c);
                next
            });
            action[j].push(idx);
        }
        k += 1;
    }
    debug_assert_eq!(reps.len(), index);
    let images: Vec<Perm> = action
        .into_iter()
        .map(Perm::from_images_unchecked)
        .collect();
    let q = FiniteGroup::from_perms(index.max(1), images.clone());
    let hom = Homomorphism::new(g.clone(), q.clone(), images)?;
    Ok((q, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;

    fn s4() -> FiniteGroup {
        FiniteGroup::from_perms(
            4,
            vec![
                Perm::from_cycles(4, &[&[1, 2]]).unwrap(),
                Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
            ],
        )
    }

    #[test]
    fn s4_mod_klein_is_s3() {
        let g = s4();
        let v4 = g.normal_closure_perms(&[Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()]);
        let (q, hom) = quotient(&g, &v4, &Config::default()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let mut sizes: Vec<u128> = conjugacy_classes(&q, &Config::default())
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        for p in v4.perm_generators() {
            assert!(hom.apply(p).unwrap().is_identity());
        }
        assert_eq!(hom.kernel_order(), 4);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s4();
        let (q, _) = quotient(&g, &g, &Config::default()).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let g = s4();
        let h = g.subgroup_from_perms(vec![Perm::from_cycles(4, &[&[1, 2]]).unwrap()]);
        assert_eq!(
            quotient(&g, &h, &Config::default()).unwrap_err(),
            GroupError::NotNormal
        );
    }

    #[test]
    fn bogus_homomorphism_rejected() {
        // Sending a transposition and a 4-cycle of S4 to a 3-cycle does not define a map.
        let g = s4();
        let z3 = FiniteGroup::from_perms(3, vec![Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap()]);
        let c = Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert!(Homomorphism::new(g, z3, vec![c.clone(), c]).is_err());
    }

    #[test]
    fn apply_agrees_with_generator_words() {
        let g = s4();
        let v4 = g.normal_closure_perms(&[Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()]);
        let (_, hom) = quotient(&g, &v4, &Config::default()).unwrap();
        let gens = g.perm_generators();
        let word = gens[0]
            .compose(&gens[1])
            .compose(&gens[1])
            .compose(&gens[0]);
        let imgs = hom.generator_images();
        let expected = imgs[0]
            .compose(&imgs[1])
            .compose(&imgs[1])
            .compose(&imgs[0]);
        assert_eq!(hom.apply(&word).unwrap(), expected);
    }
}
