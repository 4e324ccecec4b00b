mod common;

use proptest::prelude::*;

use gti_core::catalog::{catalog_group, cyclic, expected_order, standard_names};
use gti_core::independence::{
    certify_family, goingup_check, gtprop_check, is_gt_independent, is_independent,
    serre_reduction, FamilySpec, ProductSubgroup,
};
use gti_core::structure::fsq;
use gti_core::taxonomy::SimpleGroupId;
use gti_core::{Config, FiniteGroup, GroupError};

fn cat(name: &str) -> FiniteGroup {
    catalog_group(name, &Config::default()).unwrap()
}

fn fam(spec: &[(u64, &str)]) -> FamilySpec {
    FamilySpec::new(spec.iter().map(|&(l, n)| (l, cat(n))).collect()).unwrap()
}

fn gen(f: &FamilySpec, i: usize, j: usize) -> gti_core::Perm {
    f.group(i).perm_generators()[j].clone()
}

#[test]
fn gt_independence_examples() {
    let cfg = Config::default();
    assert_eq!(
        is_gt_independent(&fam(&[(2, "Z2"), (3, "Z3")]), &cfg)
            .unwrap()
            .gt_independent,
        Some(true)
    );
    let r = is_gt_independent(&fam(&[(7, "Z6"), (11, "Z10")]), &cfg).unwrap();
    assert_eq!(r.gt_independent, Some(false));
    let w = r.witness.unwrap();
    assert_eq!((w.pair, w.id), ((7, 11), SimpleGroupId::cyclic(2)));
    assert_eq!(
        is_gt_independent(&fam(&[(5, "A5"), (7, "PSL2_7")]), &cfg)
            .unwrap()
            .gt_independent,
        Some(true)
    );
    // aliases collide even under different labels
    let r = is_gt_independent(&fam(&[(2, "A5"), (5, "PSL2_5")]), &cfg).unwrap();
    assert_eq!(r.gt_independent, Some(false));
}

#[test]
fn independence_examples() {
    let cfg = Config::default();
    let full = ProductSubgroup::full_product(fam(&[(5, "A5"), (7, "PSL2_7")])).unwrap();
    assert_eq!(is_independent(&full, &cfg).unwrap().independent, Some(true));
    assert!(serre_reduction(&full, &cfg).is_ok());

    let f = fam(&[(2, "Z2"), (3, "Z2")]);
    let diag = ProductSubgroup::new(f.clone(), vec![vec![gen(&f, 0, 0), gen(&f, 1, 0)]]).unwrap();
    let r = is_independent(&diag, &cfg).unwrap();
    assert_eq!((r.independent, diag.group().order()), (Some(false), 2));

    let f = fam(&[(2, "Z2"), (3, "Z3")]);
    let diag = ProductSubgroup::new(f.clone(), vec![vec![gen(&f, 0, 0), gen(&f, 1, 0)]]).unwrap();
    assert_eq!(diag.group().order(), 6);
    assert!(serre_reduction(&diag, &cfg).is_ok());

    // not gt-independent, yet the subgroup is everything
    let f = fam(&[(7, "Z6"), (11, "Z10")]);
    let e = f.group(1).identity_perm();
    let h = ProductSubgroup::new(
        f.clone(),
        vec![vec![gen(&f, 0, 0), gen(&f, 1, 0)], vec![gen(&f, 0, 0), e]],
    )
    .unwrap();
    assert_eq!(is_independent(&h, &cfg).unwrap().independent, Some(true));
    assert!(matches!(
        serre_reduction(&h, &cfg),
        Err(GroupError::Precondition(_))
    ));
}

#[test]
fn budget_refusal() {
    let cfg = Config {
        product_budget: 100,
        ..Config::default()
    };
    let full = ProductSubgroup::full_product(fam(&[(5, "A5"), (7, "PSL2_7")])).unwrap();
    let e = is_independent(&full, &cfg).unwrap_err();
    assert!(e.is_resource_cap());
}

#[test]
fn tuple_components_must_lie_in_factors() {
    let f = fam(&[(2, "A4"), (3, "Z3")]);
    let odd = gti_core::Perm::from_cycles(4, &[&[1, 2]]).unwrap();
    let bad = ProductSubgroup::new(f.clone(), vec![vec![odd, gen(&f, 1, 0)]]);
    assert!(matches!(bad, Err(GroupError::AtPrime { ell: 2, .. })));
}

#[test]
fn goingup_examples() {
    let cfg = Config::default();
    let gl = cat("GL2_5");
    let sl = cat("SL2_5");
    let r = goingup_check(&gl, 5, &sl, 3, &cfg).unwrap();
    assert!(r.hypothesis && r.conclusion && r.implication);
    let s4 = cat("S4");
    let r = goingup_check(&s4, 5, &FiniteGroup::from_perms(4, vec![]), 3, &cfg).unwrap();
    assert!(r.hypothesis && r.conclusion);
    // with GL2(5) the trivial subgroup still satisfies the conclusion, but not the hypothesis
    let r = goingup_check(
        &gl,
        5,
        &FiniteGroup::from_perms(gl.degree(), vec![]),
        3,
        &cfg,
    )
    .unwrap();
    assert!(!r.hypothesis && r.conclusion);
    let z = sl.center(&cfg).unwrap();
    let r = goingup_check(&sl, 5, &z, 3, &cfg).unwrap();
    assert!(!r.hypothesis && !r.conclusion && r.implication);
    assert!(goingup_check(&gl, 3, &sl, 3, &cfg).is_err());
    // a subgroup outside G+ is refused
    assert!(goingup_check(&gl, 5, &gl, 3, &cfg).is_err());
}

#[test]
fn gtprop_examples() {
    let cfg = Config::default();
    let r = gtprop_check(&cat("GL2_5"), 5, &cfg).unwrap();
    assert!(r.passed());
    assert_eq!(
        (r.quotient_order, r.invariant_factors.clone()),
        (4, vec![4])
    );
    assert_eq!(
        gtprop_check(&cat("SL2_7"), 7, &cfg).unwrap().quotient_order,
        1
    );
    let r = gtprop_check(&cat("T2_5"), 5, &cfg).unwrap();
    assert!(r.passed());
    assert_eq!((r.quotient_order, r.invariant_factors), (16, vec![4, 4]));
    // S5 modulo its 2-elements is trivial, modulo 5-elements is Z/2
    assert_eq!(gtprop_check(&cat("S5"), 5, &cfg).unwrap().quotient_order, 2);
}

#[test]
fn certificate_examples() {
    let cfg = Config::default();
    assert!(
        certify_family(&fam(&[(5, "SL2_5"), (7, "SL2_7")]), 3, &cfg)
            .unwrap()
            .certified
    );
    assert!(
        certify_family(&fam(&[(5, "Z5"), (7, "Z7")]), 3, &cfg)
            .unwrap()
            .certified
    );
    let c = certify_family(&fam(&[(5, "Z2"), (7, "Z7")]), 3, &cfg).unwrap();
    assert!(!c.certified);
    assert_eq!(c.refusal, Some((5, SimpleGroupId::cyclic(2))));
    // small primes only admit Z/ell
    let c = certify_family(&fam(&[(5, "SL2_5"), (7, "Z7")]), 5, &cfg).unwrap();
    assert_eq!(c.refusal.map(|r| r.0), Some(5));
}

#[test]
fn certified_families_are_gt_independent() {
    let cfg = Config::default();
    let names: Vec<String> = standard_names()
        .into_iter()
        .filter(|n| expected_order(n).unwrap() <= 200 && n != "Z1")
        .collect();
    let primes = [2u64, 3, 5, 7, 11, 13];
    let mut certified = 0;
    for a in &names {
        for b in &names {
            for (i, &l1) in primes.iter().enumerate() {
                let l2 = primes[(i + 1) % primes.len()];
                if l1 >= l2 {
                    continue;
                }
                let f = FamilySpec::new(vec![(l1, cat(a)), (l2, cat(b))]).unwrap();
                let c = certify_family(&f, 0, &cfg).unwrap();
                if c.certified {
                    certified += 1;
                    assert_eq!(
                        is_gt_independent(&f, &cfg).unwrap().gt_independent,
                        Some(true),
                        "{a} {b}"
                    );
                }
            }
        }
    }
    assert!(certified > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn even_cyclic_factors_share_z2(a in 1usize..=12, b in 1usize..=12) {
        let cfg = Config::default();
        let f = FamilySpec::new(vec![(3, cyclic(2 * a)), (5, cyclic(2 * b))]).unwrap();
        let r = is_gt_independent(&f, &cfg).unwrap();
        prop_assert_eq!(r.gt_independent, Some(false));
        prop_assert_eq!(r.witness.unwrap().id, SimpleGroupId::cyclic(2));
    }

    #[test]
    fn cyclic_gti_is_coprimality(a in 2usize..=30, b in 2usize..=30) {
        let cfg = Config::default();
        let f = FamilySpec::new(vec![(3, cyclic(a)), (5, cyclic(b))]).unwrap();
        let r = is_gt_independent(&f, &cfg).unwrap();
        let coprime = num_integer::gcd(a, b) == 1;
        prop_assert_eq!(r.gt_independent, Some(coprime));
        // coprime cyclic factors generate the product diagonally
        let x = f.group(0).perm_generators()[0].clone();
        let y = f.group(1).perm_generators()[0].clone();
        let h = ProductSubgroup::new(f.clone(), vec![vec![x, y]]).unwrap();
        prop_assert_eq!(is_independent(&h, &cfg).unwrap().independent, Some(coprime));
        prop_assert_eq!(fsq(f.group(0), &cfg).unwrap().ids.len(), gti_core::field::factorize(a as u64).len());
    }
}
