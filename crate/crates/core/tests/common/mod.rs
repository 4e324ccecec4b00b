//! Brute-force reference computations on explicit element sets.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use gti_core::{FiniteGroup, Perm};

pub type Raw = Vec<u32>;
pub type Elems = BTreeSet<Raw>;

pub fn mul(a: &Raw, b: &Raw) -> Raw {
    // apply a, then b
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inv(a: &Raw) -> Raw {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn identity(n: usize) -> Raw {
    (0..n as u32).collect()
}

pub fn order_of(a: &Raw) -> u64 {
    let id = identity(a.len());
    let mut x = a.clone();
    let mut k = 1;
    while x != id {
        x = mul(&x, a);
        k += 1;
    }
    k
}

/// Every product of the generators, found breadth first.
pub fn closure(degree: usize, gens: &[Raw]) -> Elems {
    let id = identity(degree);
    let mut seen: HashSet<Raw> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn raw_gens(g: &FiniteGroup) -> Vec<Raw> {
    g.perm_generators()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

pub fn elements(g: &FiniteGroup) -> Elems {
    closure(g.degree(), &raw_gens(g))
}

pub fn to_perm(x: &Raw) -> Perm {
    Perm::from_images(x.clone()).unwrap()
}

pub fn degree_of(s: &Elems) -> usize {
    s.iter().next().map(|x| x.len()).unwrap_or(0)
}

/// Closure of a set of elements inside a finite group.
pub fn generated(degree: usize, s: impl IntoIterator<Item = Raw>) -> Elems {
    let gens: Vec<Raw> = s.into_iter().collect();
    closure(degree, &gens)
}

pub fn conjugacy_classes(g: &Elems) -> Vec<Elems> {
    let mut left: BTreeSet<Raw> = g.clone();
    let mut out = Vec::new();
    while let Some(x) = left.iter().next().cloned() {
        let class: Elems = g.iter().map(|h| mul(&mul(&inv(h), &x), h)).collect();
        for y in &class {
            left.remove(y);
        }
        out.push(class);
    }
    out
}

pub fn is_normal(n: &Elems, g: &Elems) -> bool {
    n.iter()
        .all(|x| g.iter().all(|h| n.contains(&mul(&mul(&inv(h), x), h))))
}

/// Every normal subgroup, by saturating joins with class closures.
pub fn normal_subgroups(g: &Elems) -> Vec<Elems> {
    let d = degree_of(g);
    let classes = conjugacy_classes(g);
    let mut found: BTreeSet<Elems> = BTreeSet::from([generated(d, [identity(d)])]);
    let mut frontier: Vec<Elems> = found.iter().cloned().collect();
    while let Some(n) = frontier.pop() {
        for c in &classes {
            if c.is_subset(&n) {
                continue;
            }
            let m = generated(d, n.iter().chain(c.iter()).cloned());
            if found.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    let mut v: Vec<Elems> = found.into_iter().collect();
    v.sort_by_key(|s| s.len());
    v
}

pub fn maximal_normal(g: &Elems) -> Vec<Elems> {
    let all = normal_subgroups(g);
    all.iter()
        .filter(|n| n.len() < g.len())
        .filter(|n| {
            !all.iter()
                .any(|m| m.len() < g.len() && m.len() > n.len() && n.is_subset(m))
        })
        .cloned()
        .collect()
}

/// Orders of composition factors along one series.
pub fn composition_orders(g: &Elems) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = g.clone();
    while cur.len() > 1 {
        let m = maximal_normal(&cur).into_iter().next().unwrap();
        out.push(cur.len() / m.len());
        cur = m;
    }
    out.sort_unstable();
    out
}

/// Orders `|G/M|` over the maximal normal subgroups `M`.
pub fn simple_quotient_orders(g: &Elems) -> BTreeSet<usize> {
    maximal_normal(g)
        .iter()
        .map(|m| g.len() / m.len())
        .collect()
}

pub fn is_prime_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub fn is_abelian(s: &Elems) -> bool {
    s.iter().all(|a| s.iter().all(|b| mul(a, b) == mul(b, a)))
}

pub fn same_elements(g: &FiniteGroup, s: &Elems) -> bool {
    g.order() == s.len() as u128 && s.iter().all(|x| g.contains_perm(&to_perm(x)))
}
