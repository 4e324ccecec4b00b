mod common;

use common::*;
use proptest::prelude::*;

use gti_core::catalog::{catalog_group, dicyclic, symmetric};
use gti_core::classes::conjugacy_classes as classes;
use gti_core::classical::{general_linear, special_linear};
use gti_core::homomorphism::quotient;
use gti_core::{Config, FiniteGroup, Perm};

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 0..=3)
            .prop_map(move |gens| FiniteGroup::from_perms(n, gens))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_enumeration(g in group_strategy()) {
        prop_assert_eq!(g.order(), elements(&g).len() as u128);
    }

    #[test]
    fn membership_matches_enumeration(g in group_strategy(), x in perm_strategy(6)) {
        let x = x.restricted(0, g.degree());
        if x.images().iter().all(|&i| (i as usize) < g.degree()) {
            let s = elements(&g);
            prop_assert_eq!(g.contains_perm(&x), s.contains(x.images()));
        }
    }

    #[test]
    fn classes_partition_the_group(g in group_strategy()) {
        let cfg = Config::default();
        let mut sizes: Vec<u128> = classes(&g, &cfg).unwrap().iter().map(|c| c.size).collect();
        let mut want: Vec<u128> = conjugacy_classes(&elements(&g)).iter().map(|c| c.len() as u128).collect();
        sizes.sort_unstable();
        want.sort_unstable();
        prop_assert_eq!(sizes, want);
    }

    #[test]
    fn derived_and_center_match_enumeration(g in group_strategy()) {
        let cfg = Config::default();
        let s = elements(&g);
        let d = degree_of(&s);
        let comms = s.iter().flat_map(|a| s.iter().map(move |b| mul(&mul(&inv(a), &inv(b)), &mul(a, b))));
        let derived = generated(d, comms.collect::<Elems>());
        prop_assert!(same_elements(&g.derived_subgroup(), &derived));
        let center: Elems = s.iter().filter(|a| s.iter().all(|b| mul(a, b) == mul(b, a))).cloned().collect();
        prop_assert!(same_elements(&g.center(&cfg).unwrap(), &center));
    }
}

#[test]
fn s4_from_transposition_and_four_cycle() {
    let t = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
    let c = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
    let g = FiniteGroup::from_perms(4, vec![t, c]);
    assert_eq!(g.order(), 24);
    assert_eq!(elements(&g).len(), 24);
}

#[test]
fn empty_generating_set_is_trivial() {
    assert_eq!(FiniteGroup::from_perms(3, vec![]).order(), 1);
}

#[test]
fn small_linear_groups() {
    let cfg = Config::default();
    let gl = general_linear(2, 3, &cfg).unwrap();
    // (9 - 1)(9 - 3)
    assert_eq!(gl.order(), 48);
    assert_eq!(gl.degree(), 8);
    assert_eq!(elements(&gl).len(), 48);
    let sl = special_linear(2, 5, &cfg).unwrap();
    assert_eq!(sl.degree(), 24);
    assert_eq!(elements(&sl).len(), 120);
    assert_eq!(sl.center(&cfg).unwrap().order(), 2);
}

#[test]
fn alternating_group_excludes_transpositions() {
    let cfg = Config::default();
    let a4 = catalog_group("A4", &cfg).unwrap();
    assert!(!a4.contains_perm(&Perm::from_cycles(4, &[&[1, 2]]).unwrap()));
    assert_eq!(symmetric(5).order(), 120);
}

#[test]
fn quaternion_classes() {
    let cfg = Config::default();
    let q8 = dicyclic(2);
    let mut sizes: Vec<u128> = classes(&q8, &cfg).unwrap().iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
}

#[test]
fn normal_closures() {
    let s5 = symmetric(5);
    let c5 = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
    assert_eq!(s5.normal_closure_perms(&[c5]).order(), 60);
    let s4 = symmetric(4);
    let v = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
    assert_eq!(s4.normal_closure_perms(&[v]).order(), 4);
    assert_eq!(s4.normal_closure_perms(&[Perm::identity(4)]).order(), 1);
    assert_eq!(s4.derived_subgroup().order(), 12);
}

#[test]
fn quotients() {
    let cfg = Config::default();
    let gl = general_linear(2, 5, &cfg).unwrap();
    let sl = catalog_group("SL2_5", &cfg).unwrap();
    let (q, _) = quotient(&gl, &sl, &cfg).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.is_abelian());
    // cyclic: some element has order 4
    assert!(elements(&q).iter().any(|x| order_of(x) == 4));
}
