mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;

use common::*;
use gti_core::catalog::{catalog_group, cyclic, expected_order, standard_names};
use gti_core::classical::projective_special_linear;
use gti_core::field::prime_power;
use gti_core::taxonomy::{
    artin_collision_scan, enumerate_lie, identify_by_order, identify_simple, in_class_b,
    in_class_jor, in_class_lie_ell, lie_order, sporadic_order, LieFamily, SimpleGroupId,
    ALL_FAMILIES, TITS_ORDER,
};
use gti_core::{Config, FiniteGroup};

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

/// Orders of the simple groups of Lie type written out as products.
fn reference_order(f: LieFamily, n: u32, q: u64) -> BigUint {
    use LieFamily::*;
    let qb = BigUint::from(q);
    let p = |e: u32| -> BigUint { Pow::pow(&qb, e) };
    let m = |e: u32| p(e) - 1u32;
    let pl = |e: u32| p(e) + 1u32;
    let gcd = |a: u64, b: &BigUint| BigUint::from(a).gcd(b);
    match f {
        A => {
            let mut o = p(n * (n + 1) / 2);
            for i in 1..=n {
                o *= m(i + 1);
            }
            o / gcd(n as u64 + 1, &(qb.clone() - 1u32))
        }
        B | C => {
            let mut o = p(n * n);
            for i in 1..=n {
                o *= m(2 * i);
            }
            o / gcd(2, &(qb.clone() - 1u32))
        }
        D => {
            let mut o = p(n * (n - 1)) * m(n);
            for i in 1..n {
                o *= m(2 * i);
            }
            o / gcd(4, &m(n))
        }
        TwistedA => {
            let mut o = p(n * (n + 1) / 2);
            for i in 1..=n {
                o *= if (i + 1) % 2 == 0 {
                    m(i + 1)
                } else {
                    pl(i + 1)
                };
            }
            o / gcd(n as u64 + 1, &(qb.clone() + 1u32))
        }
        TwistedD => {
            let mut o = p(n * (n - 1)) * pl(n);
            for i in 1..n {
                o *= m(2 * i);
            }
            o / gcd(4, &pl(n))
        }
        G => p(6) * m(6) * m(2),
        Suzuki => p(2) * pl(2) * (qb.clone() - 1u32),
        Ree => p(3) * pl(3) * (qb.clone() - 1u32),
        Triality => p(12) * (p(8) + p(4) + 1u32) * m(6) * m(2),
        F => p(24) * m(12) * m(8) * m(6) * m(2),
        TwistedF => p(12) * pl(6) * m(4) * pl(3) * (qb.clone() - 1u32),
        E if n == 6 => {
            p(36) * m(12) * m(9) * m(8) * m(6) * m(5) * m(2) / gcd(3, &(qb.clone() - 1u32))
        }
        E if n == 7 => {
            p(63) * m(18) * m(14) * m(12) * m(10) * m(8) * m(6) * m(2)
                / gcd(2, &(qb.clone() - 1u32))
        }
        E => p(120) * m(30) * m(24) * m(20) * m(18) * m(14) * m(12) * m(8) * m(2),
        TwistedE => {
            p(36) * m(12) * pl(9) * m(8) * m(6) * pl(5) * m(2) / gcd(3, &(qb.clone() + 1u32))
        }
    }
}

fn admissible(f: LieFamily, n: u32, q: u64) -> bool {
    use LieFamily::*;
    let Some((p, k)) = prime_power(q) else {
        return false;
    };
    let ok_rank = match f {
        A => n >= 1,
        B => n >= 2,
        C => n >= 3,
        D | TwistedD => n >= 4,
        TwistedA => n >= 2,
        G => n == 2,
        F => n == 4,
        E => (6..=8).contains(&n),
        TwistedE => n == 6,
        Triality => n == 4,
        Suzuki | TwistedF => n == if f == Suzuki { 2 } else { 4 } && p == 2 && k % 2 == 1,
        Ree => n == 2 && p == 3 && k % 2 == 1,
    };
    let small = [
        (A, 1, 2),
        (A, 1, 3),
        (TwistedA, 2, 2),
        (B, 2, 2),
        (G, 2, 2),
        (Suzuki, 2, 2),
        (Ree, 2, 3),
        (TwistedF, 4, 2),
    ];
    ok_rank && !small.contains(&(f, n, q))
}

/// Orders up to `bound`, keyed by order, with the characteristics realizing them.
fn brute_force_orders(bound: &BigUint) -> BTreeMap<BigUint, BTreeSet<u64>> {
    use LieFamily::*;
    let mut out: BTreeMap<BigUint, BTreeSet<u64>> = BTreeMap::new();
    let families = [
        (A, 1..=12),
        (B, 2..=8),
        (C, 3..=8),
        (D, 4..=8),
        (TwistedA, 2..=12),
        (TwistedD, 4..=8),
        (G, 2..=2),
        (F, 4..=4),
        (E, 6..=8),
        (TwistedE, 6..=6),
        (Triality, 4..=4),
        (Suzuki, 2..=2),
        (Ree, 2..=2),
        (TwistedF, 4..=4),
    ];
    for (f, ranks) in families {
        for n in ranks {
            for q in 2..=2000u64 {
                if !admissible(f, n, q) {
                    continue;
                }
                let o = reference_order(f, n, q);
                if &o <= bound {
                    out.entry(o).or_default().insert(prime_power(q).unwrap().0);
                }
            }
        }
    }
    out
}

#[test]
fn formula_orders_match_reference_products() {
    for f in ALL_FAMILIES {
        for n in 1..=8 {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 27, 32] {
                if admissible(f, n, q) {
                    assert_eq!(
                        lie_order(f, n, q).unwrap(),
                        reference_order(f, n, q),
                        "{f:?} {n} {q}"
                    );
                }
            }
        }
    }
}

#[test]
fn published_orders() {
    use LieFamily::*;
    let table: [(LieFamily, u32, u64, &str); 14] = [
        (A, 1, 7, "168"),
        (A, 1, 8, "504"),
        (A, 2, 3, "5616"),
        (A, 2, 4, "20160"),
        (G, 2, 3, "4245696"),
        (Suzuki, 2, 8, "29120"),
        (Ree, 2, 27, "10073444472"),
        (Triality, 4, 2, "211341312"),
        (TwistedA, 2, 3, "6048"),
        (TwistedA, 2, 5, "126000"),
        (D, 4, 2, "174182400"),
        (TwistedD, 4, 2, "197406720"),
        (F, 4, 2, "3311126603366400"),
        (E, 6, 2, "214841575522005575270400"),
    ];
    for (f, n, q, want) in table {
        assert_eq!(lie_order(f, n, q).unwrap(), big(want), "{f:?} {n} {q}");
    }
    assert_eq!(TITS_ORDER, 17_971_200);
    assert_eq!(sporadic_order("M11").unwrap(), big("7920"));
    assert_eq!(sporadic_order("J1").unwrap(), big("175560"));
    assert_eq!(sporadic_order("Co1").unwrap(), big("4157776806543360000"));
    assert_eq!(
        sporadic_order("M").unwrap(),
        big("808017424794512875886459904961710757005754368000000000")
    );
}

#[test]
fn enumeration_matches_brute_force() {
    for bound in [59u64, 60, 200, 1_000_000, 1_000_000_000] {
        let b = BigUint::from(bound);
        let want: BTreeSet<BigUint> = brute_force_orders(&b).into_keys().collect();
        let got: BTreeSet<BigUint> = enumerate_lie(&b, false)
            .into_iter()
            .map(|e| e.order)
            .collect();
        assert_eq!(got, want, "bound {bound}");
        let with_tits: BTreeSet<BigUint> = enumerate_lie(&b, true)
            .into_iter()
            .map(|e| e.order)
            .collect();
        assert_eq!(
            with_tits.contains(&BigUint::from(TITS_ORDER)),
            bound >= TITS_ORDER
        );
    }
    let sixty: Vec<String> = enumerate_lie(&BigUint::from(60u32), true)
        .iter()
        .map(|e| e.label.to_string())
        .collect();
    assert_eq!(sixty, vec!["A1q4", "A1q5"]);
}

#[test]
fn collision_orders_match_brute_force() {
    let b = BigUint::from(100_000_000u64);
    let want: BTreeSet<BigUint> = brute_force_orders(&b)
        .into_iter()
        .filter(|(_, chars)| chars.len() > 1)
        .map(|(o, _)| o)
        .collect();
    let got: BTreeSet<BigUint> = artin_collision_scan(&b, true)
        .into_iter()
        .map(|r| r.order)
        .collect();
    assert_eq!(got, want);
    assert!(artin_collision_scan(&BigUint::from(59u32), true).is_empty());
}

#[test]
fn identification_of_constructed_groups() {
    let cfg = Config::default();
    let a5 = identify_simple(&catalog_group("A5", &cfg).unwrap(), &cfg).unwrap();
    let names: BTreeSet<String> = a5.aliases().iter().map(|k| k.to_string()).collect();
    assert_eq!(names, ["Alt5", "A1q4", "A1q5"].map(String::from).into());
    assert_eq!(
        identify_simple(&cyclic(7), &cfg).unwrap(),
        SimpleGroupId::cyclic(7)
    );
    assert!(identify_simple(&catalog_group("S5", &cfg).unwrap(), &cfg).is_err());

    let a8 = identify_simple(&catalog_group("A8", &cfg).unwrap(), &cfg).unwrap();
    assert_eq!(a8.to_string(), "Alt8");
    let l34 = identify_simple(&projective_special_linear(3, 4, &cfg).unwrap(), &cfg).unwrap();
    assert_eq!(l34.to_string(), "A2q4");
    assert!(!a8.shares_alias(&l34));
    // element orders decide, order alone does not
    let n = BigUint::from(20160u32);
    assert_eq!(
        identify_by_order(&n, true, |_| Ok(true))
            .unwrap()
            .to_string(),
        "Alt8"
    );
    assert_eq!(
        identify_by_order(&n, true, |_| Ok(false))
            .unwrap()
            .to_string(),
        "A2q4"
    );
}

fn oracle_jor(s: &Elems, d: usize) -> bool {
    normal_subgroups(s)
        .iter()
        .any(|n| is_abelian(n) && s.len() / n.len() <= d)
}

#[test]
fn jordan_class_matches_enumeration() {
    let cfg = Config::default().with_class_cap(256);
    let names: Vec<String> = standard_names()
        .into_iter()
        .filter(|n| expected_order(n).unwrap() <= 120)
        .collect();
    for name in names {
        let g = catalog_group(&name, &cfg).unwrap();
        let s = elements(&g);
        for d in [1u128, 2, 6, 12, 60] {
            assert_eq!(
                in_class_jor(&g, d, &cfg).unwrap(),
                oracle_jor(&s, d as usize),
                "{name} d={d}"
            );
            assert_eq!(in_class_b(&g, d), g.order() <= d);
        }
    }
}

#[test]
fn class_examples() {
    let cfg = Config::default();
    let a5 = catalog_group("A5", &cfg).unwrap();
    assert!(in_class_lie_ell(&a5, 5, 1, &cfg).unwrap());
    assert!(in_class_lie_ell(&FiniteGroup::from_perms(3, vec![]), 7, 1, &cfg).unwrap());
    assert!(in_class_jor(&catalog_group("S4", &cfg).unwrap(), 6, &cfg).unwrap());
    assert!(!in_class_lie_ell(&cyclic(6), 5, 1, &cfg).unwrap());
    // SL2(5) over its center
    assert!(in_class_lie_ell(&catalog_group("SL2_5", &cfg).unwrap(), 5, 2, &cfg).unwrap());
    assert!(!in_class_lie_ell(&catalog_group("SL2_5", &cfg).unwrap(), 5, 1, &cfg).unwrap());
}
