//! Prime sieving, cyclotomic families and the CM divisibility bookkeeping.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::catalog::cyclic;
use crate::config::Config;
use crate::error::GroupError;
use crate::field::{factorize, is_prime};
use crate::group::FiniteGroup;
use crate::independence::{FamilySpec, IndependenceReport, Method, Witness};
use crate::perm::Perm;
use crate::structure::fsq;
use crate::taxonomy::SimpleGroupId;

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Smallest generator of `(Z/ell)^*`.
pub fn primitive_root(ell: u64) -> u64 {
    if ell == 2 {
        return 1;
    }
    let ps: Vec<u64> = factorize(ell - 1).into_iter().map(|(p, _)| p).collect();
    (2..ell)
        .find(|&g| ps.iter().all(|&p| pow_mod(g, (ell - 1) / p, ell) != 1))
        .expect("a primitive root exists")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Multiplicative group of the field with `ell` elements acting on `1..ell`.
pub fn multiplicative_group(ell: u64) -> Result<FiniteGroup, GroupError> {
    if !is_prime(ell) {
        return Err(GroupError::NotPrime(ell));
    }
    let g = primitive_root(ell);
    // point i stands for the residue i + 1
    let images: Vec<u32> = (1..ell).map(|x| (x * g % ell - 1) as u32).collect();
    let p = Perm::from_images(images)?;
    Ok(FiniteGroup::from_perms((ell - 1) as usize, vec![p]))
}

/// Factor at `ell` is the image of the mod-`ell` cyclotomic character.
pub fn cyclotomic_family(primes: &[u64]) -> Result<FamilySpec, GroupError> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GroupError::Precondition("primes must be distinct".into()));
    }
    let mut factors = Vec::with_capacity(sorted.len());
    for &ell in &sorted {
        if ell == 2 {
            return Err(GroupError::Precondition(
                "ell = 2 gives the trivial group; primes must be at least 3".into(),
            ));
        }
        factors.push((ell, multiplicative_group(ell)?));
    }
    FamilySpec::new(factors)
}

/// The `ell` in `primes` whose cyclotomic factor has `Z/q` as a quotient.
pub fn common_quotient_census(
    primes: &[u64],
    q: u64,
    cfg: &Config,
) -> Result<Vec<u64>, GroupError> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    let target = SimpleGroupId::cyclic(q);
    let mut out = Vec::new();
    for &ell in primes {
        let g = multiplicative_group(ell)?;
        if fsq(&g, cfg)?.contains_alias_of(&target) {
            out.push(ell);
        }
    }
    Ok(out)
}

/// Fraction of primes `<= x` that are `1 mod q^a`.
pub fn density_estimate(q: u64, a: u32, x: u64) -> Result<Ratio<u64>, GroupError> {
    if x < 100 {
        return Err(GroupError::Precondition(format!(
            "X = {x} must be at least 100"
        )));
    }
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    let m = q
        .checked_pow(a)
        .ok_or_else(|| GroupError::Precondition(format!("{q}^{a} overflows")))?;
    let primes = sieve(x);
    let hits = primes.iter().filter(|&&p| p % m == 1).count() as u64;
    Ok(Ratio::new(hits, primes.len() as u64))
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CmParameters {
    pub d: u32,
    pub c: u64,
    pub q: u64,
    pub a: u32,
}

impl CmParameters {
    pub fn new(d: u32, c: u64, q: u64, a: u32) -> Result<Self, GroupError> {
        let p = CmParameters { d, c, q, a };
        p.validate()?;
        Ok(p)
    }

    pub fn modulus(&self) -> u64 {
        self.q.pow(self.a)
    }

    fn validate(&self) -> Result<(), GroupError> {
        if self.d < 2 {
            return Err(GroupError::Precondition(format!(
                "d >= 2 violated: d = {}",
                self.d
            )));
        }
        if self.c < 1 {
            return Err(GroupError::Precondition("C >= 1 violated".into()));
        }
        if self.a < 1 {
            return Err(GroupError::Precondition("a >= 1 violated".into()));
        }
        if !is_prime(self.q) {
            return Err(GroupError::NotPrime(self.q));
        }
        match self.q.checked_pow(self.a) {
            Some(m) if m > self.c => Ok(()),
            Some(m) => Err(GroupError::Precondition(format!(
                "q^a > C violated: {}^{} = {m} <= {}",
                self.q, self.a, self.c
            ))),
            None => Err(GroupError::Precondition("q^a overflows".into())),
        }
    }

    /// Checks the congruence and size conditions on `ell`.
    pub fn admits(&self, ell: u64) -> Result<(), GroupError> {
        self.validate()?;
        if !is_prime(ell) {
            return Err(GroupError::NotPrime(ell));
        }
        let m = self.modulus();
        if ell % m != 1 {
            return Err(GroupError::Precondition(format!(
                "ell = 1 mod q^a violated: {ell} mod {m} = {}",
                ell % m
            )));
        }
        Ok(())
    }

    fn power(&self, ell: u64, e: u32) -> Result<u64, GroupError> {
        (ell - 1)
            .checked_pow(e)
            .ok_or_else(|| GroupError::Precondition(format!("({ell}-1)^{e} overflows")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmCheck {
    pub ell: u64,
    pub checked: u64,
    /// First `(u, m, c)` with `q` not dividing `m`.
    pub failure: Option<(u64, u64, u64)>,
}

impl CmCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Runs through every `u * m * c = (ell-1)^d` with `u | ell-1` and `c <= C`,
/// checking that `q | m`.
pub fn cm_divisibility_check(params: &CmParameters, ell: u64) -> Result<CmCheck, GroupError> {
    params.admits(ell)?;
    let total = params.power(ell, params.d)?;
    let mut checked = 0;
    let mut failure = None;
    for u in divisors(ell - 1) {
        for c in 1..=params.c {
            let uc = u * c;
            if total % uc != 0 {
                continue;
            }
            let m = total / uc;
            checked += 1;
            if m % params.q != 0 && failure.is_none() {
                failure = Some((u, m, c));
            }
        }
    }
    Ok(CmCheck {
        ell,
        checked,
        failure,
    })
}

/// Checks every admissible `ell <= bound` in parallel; results follow the order of `ell`.
pub fn cm_divisibility_sweep(
    params: &CmParameters,
    bound: u64,
) -> Result<Vec<CmCheck>, GroupError> {
    let m = params.modulus();
    let ells: Vec<u64> = sieve(bound).into_iter().filter(|&l| l % m == 1).collect();
    ells.par_iter()
        .map(|&l| cm_divisibility_check(params, l))
        .collect()
}

/// Smallest middle factor `(ell-1)^(d-1) / c`, with `c <= C` as large as possible.
pub fn worst_case_order(params: &CmParameters, ell: u64) -> Result<u64, GroupError> {
    params.admits(ell)?;
    let base = params.power(ell, params.d - 1)?;
    let c = (1..=params.c).rev().find(|&c| base % c == 0).unwrap_or(1);
    Ok(base / c)
}

/// A cyclic family of worst-case middle factors, checked for independence.
///
/// When `Z/q` is shared it is reported as the witness, on the first pair sharing it.
pub fn cm_family_demo(
    params: &CmParameters,
    primes: &[u64],
    cfg: &Config,
) -> Result<IndependenceReport, GroupError> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    let mut factors = Vec::new();
    for &ell in &sorted {
        let n = worst_case_order(params, ell)?;
        if n as usize > cfg.degree_cap {
            return Err(GroupError::cap(
                "permutation degree",
                n as u128,
                cfg.degree_cap as u128,
            ));
        }
        factors.push((ell, cyclic(n as usize)));
    }
    let family = FamilySpec::new(factors)?;
    let sets = family.fsqs(cfg)?;
    let target = SimpleGroupId::cyclic(params.q);
    let mut witness = None;
    'outer: for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].contains_alias_of(&target) && sets[j].contains_alias_of(&target) {
                witness = Some(Witness {
                    pair: (sorted[i], sorted[j]),
                    id: target.clone(),
                });
                break 'outer;
            }
        }
    }
    let mut report = crate::independence::is_gt_independent(&family, cfg)?;
    if witness.is_some() {
        report.witness = witness;
        report.gt_independent = Some(false);
    }
    report.method = Method::Criterion;
    Ok(report)
}

/// Orders of the factors a demo family would use, for reporting.
pub fn cm_family_orders(
    params: &CmParameters,
    primes: &[u64],
) -> Result<Vec<(u64, u64)>, GroupError> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted
        .into_iter()
        .map(|l| worst_case_order(params, l).map(|n| (l, n)))
        .collect()
}
