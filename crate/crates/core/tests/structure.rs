mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;

use gti_core::catalog::{catalog_group, cyclic, expected_order, standard_names, symmetric};
use gti_core::field::factorize;
use gti_core::structure::{
    abelianization, composition_series, ell_core, ell_plus, fsq, jh, maximal_normal_subgroups,
    normal_lattice,
};
use gti_core::taxonomy::SimpleGroupId;
use gti_core::{Config, FiniteGroup, Perm};

fn small_catalog(bound: u128) -> Vec<(String, FiniteGroup)> {
    let cfg = Config::default().with_class_cap(256);
    standard_names()
        .into_iter()
        .filter(|n| expected_order(n).unwrap() <= bound)
        .map(|n| {
            let g = catalog_group(&n, &cfg).unwrap();
            (n, g)
        })
        .collect()
}

fn oracle_ell_plus(s: &Elems, ell: u64) -> Elems {
    let gens: Elems = s
        .iter()
        .filter(|x| is_prime_power_of(order_of(x), ell))
        .cloned()
        .collect();
    generated(degree_of(s), gens)
}

fn oracle_ell_core(s: &Elems, ell: u64) -> Elems {
    let d = degree_of(s);
    let mut core = generated(d, [identity(d)]);
    for c in conjugacy_classes(s) {
        let n = generated(d, c);
        if is_prime_power_of(n.len() as u64, ell) {
            core = generated(d, core.into_iter().chain(n));
        }
    }
    core
}

#[test]
fn ell_plus_and_core_match_enumeration() {
    let cfg = Config::default().with_class_cap(256);
    for (name, g) in small_catalog(720) {
        let s = elements(&g);
        for (ell, _) in factorize(g.order() as u64) {
            let plus = ell_plus(&g, ell, &cfg).unwrap();
            assert!(
                same_elements(&plus, &oracle_ell_plus(&s, ell)),
                "{name} plus {ell}"
            );
            let core = ell_core(&g, ell, &cfg).unwrap();
            assert!(
                same_elements(&core, &oracle_ell_core(&s, ell)),
                "{name} core {ell}"
            );
        }
    }
}

#[test]
fn lattice_matches_enumeration() {
    let cfg = Config::default().with_class_cap(256);
    for (name, g) in small_catalog(120) {
        let lat = normal_lattice(&g, &cfg).unwrap();
        let want = normal_subgroups(&elements(&g));
        assert_eq!(lat.len(), want.len(), "{name}");
        for n in &want {
            let i = (0..lat.len()).find(|&i| same_elements(lat.group(i), n));
            assert!(
                i.is_some(),
                "{name}: missing normal subgroup of order {}",
                n.len()
            );
        }
    }
}

#[test]
fn quotient_and_factor_orders_match_enumeration() {
    let cfg = Config::default();
    for (name, g) in small_catalog(120) {
        let s = elements(&g);
        let got: BTreeSet<usize> = fsq(&g, &cfg)
            .unwrap()
            .ids
            .iter()
            .map(|id| id.order().to_string().parse().unwrap())
            .collect();
        assert_eq!(got, simple_quotient_orders(&s), "{name}");
        let mut orders: Vec<usize> = jh(&g, &cfg)
            .unwrap()
            .iter()
            .flat_map(|(id, &k)| {
                std::iter::repeat_n(id.order().to_string().parse::<usize>().unwrap(), k)
            })
            .collect();
        orders.sort_unstable();
        assert_eq!(orders, composition_orders(&s), "{name}");
    }
}

#[test]
fn series_is_subnormal_with_simple_factors() {
    let cfg = Config::default().with_class_cap(256);
    for (name, g) in small_catalog(720) {
        let series = composition_series(&g, &cfg).unwrap();
        assert_eq!(series.first().unwrap().order(), g.order(), "{name}");
        assert_eq!(series.last().unwrap().order(), 1, "{name}");
        for w in series.windows(2) {
            assert!(w[1].is_normal_in(&w[0]), "{name}");
            let factor = w[0].order() / w[1].order();
            let sub = maximal_normal_subgroups(&w[0], &cfg).unwrap();
            assert!(
                sub.iter().any(|m| m.same_as(&w[1])),
                "{name}: step of index {factor} not maximal"
            );
        }
    }
}

#[test]
fn worked_examples() {
    let cfg = Config::default();
    let s4 = symmetric(4);
    assert_eq!(
        normal_lattice(&s4, &cfg).unwrap().orders(),
        vec![1, 4, 12, 24]
    );
    assert_eq!(jh(&s4, &cfg).unwrap().to_string(), "Z/2^3,Z/3");
    assert_eq!(ell_core(&s4, 2, &cfg).unwrap().order(), 4);
    let m: Vec<u128> = maximal_normal_subgroups(&s4, &cfg)
        .unwrap()
        .iter()
        .map(|g| g.order())
        .collect();
    assert_eq!(m, vec![12]);

    let s5 = symmetric(5);
    assert_eq!(ell_plus(&s5, 5, &cfg).unwrap().order(), 60);
    assert_eq!(fsq(&s5, &cfg).unwrap().to_string(), "Z/2");

    let a5 = catalog_group("A5", &cfg).unwrap();
    assert_eq!(fsq(&a5, &cfg).unwrap().ids.len(), 1);
    for ell in [2, 3, 5] {
        assert_eq!(ell_core(&a5, ell, &cfg).unwrap().order(), 1);
    }
    assert_eq!(normal_lattice(&a5, &cfg).unwrap().orders(), vec![1, 60]);

    let z6 = cyclic(6);
    assert_eq!(normal_lattice(&z6, &cfg).unwrap().len(), 4);
    assert_eq!(fsq(&z6, &cfg).unwrap().to_string(), "Z/2,Z/3");
    let z15 = cyclic(15);
    assert_eq!(ell_plus(&z15, 3, &cfg).unwrap().order(), 3);

    let gl = catalog_group("GL2_5", &cfg).unwrap();
    let sl = catalog_group("SL2_5", &cfg).unwrap();
    assert!(ell_plus(&gl, 5, &cfg).unwrap().same_as(&sl));
    assert_eq!(jh(&sl, &cfg).unwrap().to_string(), "Z/2,Alt5");
    let sl3 = catalog_group("SL2_3", &cfg).unwrap();
    assert_eq!(ell_core(&sl3, 2, &cfg).unwrap().order(), 8);

    assert_eq!(abelianization(&symmetric(6), &cfg).unwrap(), vec![2]);
    assert!(abelianization(&a5, &cfg).unwrap().is_empty());
    let z2z4 = catalog_group("Z2xZ4", &cfg).unwrap();
    assert_eq!(abelianization(&z2z4, &cfg).unwrap(), vec![2, 4]);
}

#[test]
fn fast_path_under_a_tight_class_cap() {
    let cfg = Config::default().with_class_cap(5);
    let s9 = catalog_group("S9", &cfg).unwrap();
    let f = fsq(&s9, &cfg).unwrap();
    assert!(f.fast_path);
    assert_eq!(
        f.ids.iter().cloned().collect::<Vec<_>>(),
        vec![SimpleGroupId::cyclic(2)]
    );
    assert_eq!(jh(&s9, &cfg).unwrap().to_string(), "Z/2,Alt9");
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_groups_agree_with_enumeration(
        g in (3usize..=6).prop_flat_map(|n| prop::collection::vec(perm_strategy(n), 1..=2)
            .prop_map(move |gens| FiniteGroup::from_perms(n, gens)))
    ) {
        let cfg = Config::default().with_class_cap(256);
        let s = elements(&g);
        for (ell, _) in factorize(g.order() as u64) {
            let plus = ell_plus(&g, ell, &cfg).unwrap();
            prop_assert!(same_elements(&plus, &oracle_ell_plus(&s, ell)));
            prop_assert!(!(g.order() / plus.order()).is_multiple_of(ell as u128));
        }
        let total: BTreeSet<usize> = fsq(&g, &cfg).unwrap().ids.iter()
            .map(|id| id.order().to_string().parse().unwrap()).collect();
        prop_assert_eq!(total, simple_quotient_orders(&s));
        let product: u128 = jh(&g, &cfg).unwrap().iter()
            .map(|(id, &k)| id.order().to_string().parse::<u128>().unwrap().pow(k as u32)).product();
        prop_assert_eq!(product, g.order());
    }
}
