//! Named groups: `S5`, `A6`, `Z12`, `D10`, `Q8`, `GL2_5`, `PSL3_4`, `Sp4_3`,
//! `PSU3_3`, `Omega5_3`, `T2_7` and direct products such as `Z2xZ4`.
//!
//! Every group is checked against its closed-form order when it is built.

use num_integer::Integer;

use crate::classical;
use crate::config::Config;
use crate::error::GroupError;
use crate::field::prime_power;
use crate::group::FiniteGroup;
use crate::perm::Perm;

pub fn symmetric(n: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[&[1, 2]]).expect("valid"));
    }
    if n >= 3 {
        let cyc: Vec<usize> = (1..=n).collect();
        gens.push(Perm::from_cycles(n, &[&cyc]).expect("valid"));
    }
    FiniteGroup::from_perms(n.max(1), gens)
}

pub fn alternating(n: usize) -> FiniteGroup {
    let gens = (3..=n)
        .map(|k| Perm::from_cycles(n, &[&[1, 2, k]]).expect("valid"))
        .collect();
    FiniteGroup::from_perms(n.max(1), gens)
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let cyc: Vec<usize> = (1..=n).collect();
    let gens = if n >= 2 {
        vec![Perm::from_cycles(n, &[&cyc]).expect("valid")]
    } else {
        vec![]
    };
    FiniteGroup::from_perms(n.max(1), gens)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rotation: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    let reflection: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    FiniteGroup::from_perms(
        n,
        vec![
            Perm::from_images(rotation).expect("valid"),
            Perm::from_images(reflection).expect("valid"),
        ],
    )
}

/// Dicyclic group `<x, y | x^(2m) = 1, y^2 = x^m, y^-1 x y = x^-1>` of order `4m`
/// in its regular representation; `m = 2` is the quaternion group.
pub fn dicyclic(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let index = |a: usize, b: usize| a + n * b;
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| -> (usize, usize) {
        if b == 0 {
            ((a + c) % n, d)
        } else if d == 0 {
            ((a + n - c) % n, 1)
        } else {
            ((a + n - c + m) % n, 0)
        }
    };
    let right = |s: (usize, usize)| {
        let mut images = vec![0u32; 2 * n];
        for b in 0..2 {
            for a in 0..n {
                let (c, d) = mul((a, b), s);
                images[index(a, b)] = index(c, d) as u32;
            }
        }
        Perm::from_images(images).expect("regular action")
    };
    FiniteGroup::from_perms(2 * n, vec![right((1, 0)), right((0, 1))])
}

/// Direct product acting on the disjoint union of the factors' domains.
pub fn direct_product(factors: &[FiniteGroup]) -> FiniteGroup {
    let total: usize = factors.iter().map(|f| f.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        for p in f.perm_generators() {
            gens.push(p.shifted(offset, total));
        }
        offset += f.degree();
    }
    FiniteGroup::from_perms(total.max(1), gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Entry {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Gl(usize, u32),
    Sl(usize, u32),
    Pgl(usize, u32),
    Psl(usize, u32),
    Sp(usize, u32),
    Psp(usize, u32),
    Psu(usize, u32),
    Omega(usize, u32),
    Torus(usize, u32),
}

fn bad(name: &str) -> GroupError {
    GroupError::UnknownCatalog(name.to_string())
}

fn parse_dim_q(rest: &str, name: &str) -> Result<(usize, u32), GroupError> {
    let (d, q) = rest.split_once('_').ok_or_else(|| bad(name))?;
    let d: usize = d.parse().map_err(|_| bad(name))?;
    let q: u32 = q.parse().map_err(|_| bad(name))?;
    if d == 0 || d > 8 || q > 4096 || prime_power(q as u64).is_none() {
        return Err(bad(name));
    }
    Ok((d, q))
}

type MakeEntry = fn(usize, u32) -> Entry;

fn parse_entry(name: &str) -> Result<Entry, GroupError> {
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(name));
    // Longer prefixes first so that `PSL` is not read as `P` + `SL`.
    let matrix_prefixes: [(&str, MakeEntry); 9] = [
        ("Omega", Entry::Omega),
        ("PSp", Entry::Psp),
        ("PSU", Entry::Psu),
        ("PGL", Entry::Pgl),
        ("PSL", Entry::Psl),
        ("GL", Entry::Gl),
        ("SL", Entry::Sl),
        ("Sp", Entry::Sp),
        ("T", Entry::Torus),
    ];
    for (prefix, make) in matrix_prefixes {
        if let Some(rest) = name.strip_prefix(prefix) {
            if rest.contains('_') {
                let (d, q) = parse_dim_q(rest, name)?;
                return Ok(make(d, q));
            }
        }
    }
    let (head, rest) = name.split_at(
        name.chars()
            .next()
            .map(char::len_utf8)
            .ok_or_else(|| bad(name))?,
    );
    let n = num(rest)?;
    let entry = match head {
        "S" if (1..=10).contains(&n) => Entry::Sym(n),
        "A" if (1..=10).contains(&n) => Entry::Alt(n),
        "Z" if n >= 1 => Entry::Cyc(n),
        "D" if n >= 6 && n % 2 == 0 => Entry::Dihedral(n / 2),
        "Q" if n >= 8 && n % 4 == 0 => Entry::Dicyclic(n / 4),
        _ => return Err(bad(name)),
    };
    Ok(entry)
}

fn gl_order(d: usize, q: u128) -> u128 {
    let qd = q.pow(d as u32);
    (0..d).map(|i| qd - q.pow(i as u32)).product()
}

fn symplectic_order(dim: usize, q: u128) -> u128 {
    let n = (dim / 2) as u32;
    q.pow(n * n) * (1..=n).map(|i| q.pow(2 * i) - 1).product::<u128>()
}

fn entry_order(e: Entry) -> Result<u128, GroupError> {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    Ok(match e {
        Entry::Sym(n) => fact(n),
        Entry::Alt(n) => (fact(n) / 2).max(1),
        Entry::Cyc(n) => n as u128,
        Entry::Dihedral(n) => 2 * n as u128,
        Entry::Dicyclic(m) => 4 * m as u128,
        Entry::Gl(d, q) => gl_order(d, q as u128),
        Entry::Sl(d, q) | Entry::Pgl(d, q) => gl_order(d, q as u128) / (q as u128 - 1),
        Entry::Psl(d, q) => {
            gl_order(d, q as u128) / (q as u128 - 1) / (d as u128).gcd(&(q as u128 - 1))
        }
        Entry::Sp(d, q) => symplectic_order(d, q as u128),
        Entry::Psp(d, q) => symplectic_order(d, q as u128) / 2u128.gcd(&(q as u128 - 1)),
        Entry::Psu(n, q) => {
            let q = q as u128;
            let n32 = n as u32;
            let mut o = q.pow(n32 * (n32 - 1) / 2);
            for i in 2..=n32 {
                o *= if i % 2 == 0 {
                    q.pow(i) - 1
                } else {
                    q.pow(i) + 1
                };
            }
            o / (n as u128).gcd(&(q + 1))
        }
        Entry::Omega(dim, q) => symplectic_order(dim - 1, q as u128) / 2,
        Entry::Torus(d, q) => (q as u128 - 1).pow(d as u32),
    })
}

fn build_entry(e: Entry, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    Ok(match e {
        Entry::Sym(n) => symmetric(n),
        Entry::Alt(n) => alternating(n),
        Entry::Cyc(n) => cyclic(n),
        Entry::Dihedral(n) => dihedral(n),
        Entry::Dicyclic(m) => dicyclic(m),
        Entry::Gl(d, q) => classical::general_linear(d, q, cfg)?,
        Entry::Sl(d, q) => classical::special_linear(d, q, cfg)?,
        Entry::Pgl(d, q) => classical::projective_general_linear(d, q, cfg)?,
        Entry::Psl(d, q) => classical::projective_special_linear(d, q, cfg)?,
        Entry::Sp(d, q) => classical::symplectic(d, q, cfg)?,
        Entry::Psp(d, q) => classical::projective_symplectic(d, q, cfg)?,
        Entry::Psu(n, q) => classical::projective_special_unitary(n, q, cfg)?,
        Entry::Omega(d, q) => classical::omega_odd(d, q, cfg)?,
        Entry::Torus(d, q) => classical::diagonal_torus(d, q, cfg)?,
    })
}

fn split_product(name: &str) -> Vec<&str> {
    name.split('x').collect()
}

/// The closed-form order of a catalog group, without building it.
pub fn expected_order(name: &str) -> Result<u128, GroupError> {
    split_product(name)
        .into_iter()
        .map(|part| parse_entry(part).and_then(entry_order))
        .product()
}

/// Builds a catalog group and checks its order against the closed form.
pub fn catalog_group(name: &str, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    let parts = split_product(name);
    let entries = parts
        .iter()
        .map(|p| parse_entry(p))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = expected_order(name)?;
    let group = if entries.len() == 1 {
        build_entry(entries[0], cfg)?
    } else {
        let factors = entries
            .iter()
            .map(|&e| build_entry(e, cfg))
            .collect::<Result<Vec<_>, _>>()?;
        direct_product(&factors)
    };
    if group.order() != expected {
        return Err(GroupError::Precondition(format!(
            "catalog self-test failed for {name}: built order {} but closed form {expected}",
            group.order()
        )));
    }
    Ok(group)
}

const PRIMES: [u32; 6] = [3, 5, 7, 9, 11, 13];

/// The standard list of catalog names.
pub fn standard_names() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    names.extend((2..=10).map(|n| format!("S{n}")));
    names.extend((3..=10).map(|n| format!("A{n}")));
    names.extend((1..=16).map(|n| format!("Z{n}")));
    for p in [
        "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z2xZ6", "Z4xZ4", "Z3xZ6",
    ] {
        names.push(p.into());
    }
    names.extend(
        [6, 8, 10, 12, 14, 16, 18, 20]
            .iter()
            .map(|n| format!("D{n}")),
    );
    names.extend(["Q8", "Q12", "Q16"].map(String::from));
    for d in 2..=3 {
        for q in PRIMES {
            for family in ["GL", "SL", "PGL", "PSL"] {
                names.push(format!("{family}{d}_{q}"));
            }
        }
    }
    names.push("Sp4_3".into());
    names.extend(PRIMES.iter().map(|q| format!("T2_{q}")));
    names.extend([3, 5, 7].iter().map(|q| format!("T3_{q}")));
    for p in [
        "S3xZ2", "S3xS3", "A4xZ2", "S4xZ2", "A5xZ2", "D8xZ3", "Q8xZ3", "S3xZ5", "A5xZ3",
    ] {
        names.push(p.into());
    }
    names
}
